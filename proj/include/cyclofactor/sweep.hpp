#pragma once

// The (q, n, a) grid used for bulk checking.

#include <cstdint>
#include <vector>

#include "cyclofactor/json_io.hpp"

namespace cyclofactor {

struct SweepConfig {
  std::vector<std::uint64_t> fields{2, 3, 4, 5, 7, 8, 9, 11, 13};
  std::uint64_t max_n = 60;
  std::uint64_t seed = 20240601;
  std::uint64_t all_a_up_to = 9;  // every a when q <= this, else `random_a` seeded picks
  std::size_t random_a = 10;
  bool oracle = false;             // also compare with brute_factor
  std::size_t oracle_max_degree = 200;
};

struct SweepInstance {
  ff::FieldElem a;
  std::uint64_t n = 1;
};

std::vector<SweepInstance> sweep_grid(const SweepConfig& cfg);

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t reconstruct_failures = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_failures = 0;
  std::size_t errors = 0;

  bool ok() const { return reconstruct_failures == 0 && oracle_failures == 0 && errors == 0; }
};

/// Runs factor_binomial over the grid. The JSON holds every instance in grid
/// order and depends only on the configuration.
Json run_sweep(const SweepConfig& cfg, SweepSummary& summary);

}  // namespace cyclofactor

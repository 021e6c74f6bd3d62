#include "cyclofactor/sweep.hpp"

#include <algorithm>
#include <random>

#include "cyclofactor/error.hpp"
#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/oracle.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor {

std::vector<SweepInstance> sweep_grid(const SweepConfig& cfg) {
  std::vector<SweepInstance> out;
  for (std::uint64_t q : cfg.fields) {
    const ff::Field fq = poly::parse_field(std::to_string(q));
    const std::uint64_t count = q - 1;
    std::vector<std::uint64_t> picks(count);
    for (std::uint64_t i = 0; i < count; ++i) picks[i] = i + 1;
    if (q > cfg.all_a_up_to && cfg.random_a < count) {
      // Partial Fisher-Yates with a per-field stream.
      std::mt19937_64 rng(cfg.seed ^ (q * 0x9E3779B97F4A7C15ULL));
      for (std::size_t i = 0; i < cfg.random_a; ++i) {
        const std::uint64_t j = i + rng() % (count - i);
        std::swap(picks[i], picks[j]);
      }
      picks.resize(cfg.random_a);
      std::sort(picks.begin(), picks.end());
    }
    for (std::uint64_t n = 1; n <= cfg.max_n; ++n) {
      for (std::uint64_t idx : picks) out.push_back({fq.element_at(nt::BigInt(static_cast<unsigned long>(idx))), n});
    }
  }
  return out;
}

Json run_sweep(const SweepConfig& cfg, SweepSummary& summary) {
  summary = {};
  Json instances = Json::array();
  oracle::OracleConfig ocfg;
  ocfg.rng_seed = cfg.seed;
  for (const auto& inst : sweep_grid(cfg)) {
    ++summary.instances;
    Json rec;
    rec["q"] = nt::to_u64(inst.a.field().size());
    rec["n"] = inst.n;
    rec["a"] = inst.a.to_string();
    try {
      const Factorization fz = factor::factor_binomial(inst.a, inst.n);
      const bool rebuilt = fz.product() == fz.base;
      if (!rebuilt) ++summary.reconstruct_failures;
      rec["result"] = to_json(fz);
      rec["reconstructs"] = rebuilt;
      if (cfg.oracle && inst.n <= cfg.oracle_max_degree) {
        ++summary.oracle_checked;
        const bool same = multiset(oracle::brute_factor(fz.base, ocfg)) == multiset(fz);
        if (!same) ++summary.oracle_failures;
        rec["oracle_agrees"] = same;
      }
    } catch (const std::exception& e) {
      ++summary.errors;
      rec["error"] = e.what();
    }
    instances.push_back(std::move(rec));
  }
  Json out;
  out["seed"] = cfg.seed;
  out["fields"] = cfg.fields;
  out["max_n"] = cfg.max_n;
  out["instances"] = std::move(instances);
  out["summary"] = {{"instances", summary.instances},
                    {"reconstruct_failures", summary.reconstruct_failures},
                    {"oracle_checked", summary.oracle_checked},
                    {"oracle_failures", summary.oracle_failures},
                    {"errors", summary.errors}};
  return out;
}

}  // namespace cyclofactor

#pragma once

// Generic factorization over F_q used only to cross-check the closed formulas:
// square-free decomposition, distinct-degree and equal-degree splitting.

#include <cstdint>
#include <vector>

#include "cyclofactor/factorization.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor::oracle {

struct OracleConfig {
  std::uint64_t rng_seed = 20240601;
  std::size_t max_total_degree = 512;
};

/// Rabin's test. Linear polynomials are irreducible; constants are not.
bool is_irreducible(const poly::Poly& f, const OracleConfig& cfg = {});

struct PowerFactor {
  poly::Poly poly;
  std::uint64_t multiplicity;
};

/// f = lc * prod g_i^i with g_i square-free and pairwise coprime.
std::vector<PowerFactor> square_free(const poly::Poly& f);

struct DegreeBlock {
  poly::Poly poly;  // product of all irreducible factors of this degree
  std::uint64_t degree;
};

/// Split a monic square-free polynomial by factor degree.
std::vector<DegreeBlock> distinct_degree(const poly::Poly& f);

/// Split a monic square-free product of irreducibles of degree d.
std::vector<poly::Poly> equal_degree(const poly::Poly& f, std::uint64_t d, std::uint64_t seed);

Factorization brute_factor(const poly::Poly& f, const OracleConfig& cfg = {});

}  // namespace cyclofactor::oracle

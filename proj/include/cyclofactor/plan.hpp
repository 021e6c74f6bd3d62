#pragma once

// Parameter records for the closed-form factorizations. The integer part of a
// binomial plan depends only on (q, n, ord(a)); the element part is filled in
// by the engine once the splitting field is built.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclofactor/field.hpp"
#include "cyclofactor/numtheory.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor::factor {

struct BinomialPlan {
  std::uint64_t q = 0;  // base of the cosets and the Frobenius (q, or q^k for compositions)
  std::uint64_t n = 0;  // coprime to q
  std::uint64_t order_a = 1;
  bool a_is_one = false;

  std::uint64_t n1 = 1, n2 = 1;
  std::uint64_t w = 1, s = 1;
  std::uint64_t d1_1 = 1, d1_2 = 1, d1_s = 1;
  std::uint64_t d2_1 = 1, d2_2 = 1, d2_s = 1;
  std::uint64_t s1 = 1;
  std::uint64_t r = 1;
  nt::CosetTable cosets;          // base q modulo d2_s
  std::vector<std::uint64_t> t_i;  // aligned with cosets.reps
  std::vector<std::uint64_t> c_i;

  // Element side, over F_{q^s}.
  std::optional<ff::FieldElem> b;
  std::optional<ff::FieldElem> zeta_d1;
  std::optional<ff::FieldElem> zeta_d2;
  std::vector<std::uint64_t> j_classes;  // smallest member of each orbit
  std::vector<std::uint64_t> j_orbit_sizes;

  /// d1_t for arbitrary t.
  std::uint64_t d1(std::uint64_t t) const;
  /// d2_t for arbitrary t.
  std::uint64_t d2(std::uint64_t t) const;
};

/// Integer parameters of the closed-form factorization. Requires gcd(n, q) = 1 and
/// order_a | q - 1.
BinomialPlan make_binomial_plan(std::uint64_t q, std::uint64_t n, std::uint64_t order_a, bool a_is_one);

struct CompositionPlan {
  poly::Poly f;  // monic, over F_q
  std::uint64_t k = 1;
  std::optional<ff::FieldElem> alpha;  // root of f in F_{q^k}
  BinomialPlan inner;                  // base q^k
  std::uint64_t char_power = 1;
  std::optional<ff::FieldElem> scale;  // leading coefficient when f is not monic
};

}  // namespace cyclofactor::factor

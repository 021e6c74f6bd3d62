#pragma once

// The closed-form engine: X^n - alpha over a base field F_Q (Q = q or q^k),
// every factor returned as a polynomial over the original F_q.

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclofactor/factorization.hpp"
#include "cyclofactor/plan.hpp"

namespace cyclofactor::factor {

/// Alternative choices of the roots of unity and of b. Every valid choice
/// must give the same factor multiset.
struct EngineOptions {
  std::uint64_t zeta_twist = 1;  // zeta_d -> zeta_d^twist, coprime to d
  std::uint64_t root_shift = 0;  // b -> b * zeta_d1^shift
};

/// One index (j, v, i, m) of the product together with the coefficient gamma
/// of the binomial X^{K v} - gamma, living in the splitting field.
struct SpinTerm {
  std::uint64_t j = 0, v = 1, i = 0, m = 0;
  std::uint64_t exponent = 1;  // K * v with K = n1 / d1_s
  std::uint64_t c = 1;         // coefficient degree over F_Q
  ff::FieldElem gamma;
  poly::Poly factor;  // over F_q
  std::uint64_t declared_degree = 0;
  std::uint64_t declared_order = 0;
};

struct EngineResult {
  BinomialPlan plan;
  ff::Field big;  // F_{Q^s}
  std::vector<SpinTerm> terms;
};

/// Restricts the (v, i) pairs that are expanded.
using TermFilter = std::function<bool(const BinomialPlan&, std::uint64_t v, std::uint64_t i)>;

/// Factor X^n - alpha for alpha in F_{q^k} and gcd(n, q) = 1, returning the
/// q-spins over `base` = F_q.
EngineResult run_engine(const ff::FieldElem& alpha, std::uint64_t n, ff::Field base,
                        const EngineOptions& opt = {}, const TermFilter& filter = {});

}  // namespace cyclofactor::factor

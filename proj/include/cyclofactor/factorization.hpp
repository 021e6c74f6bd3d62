#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclofactor/plan.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor {

enum class Source { Binomial, Unity, Cyclotomic, Composition, RadQ1, Shortcut, Oracle };

std::string_view to_string(Source s);

struct FactorEntry {
  poly::Poly poly;
  std::uint64_t multiplicity = 1;
  std::uint64_t declared_degree = 0;
  std::uint64_t declared_order = 0;  // 0 when not declared
};

/// unit * prod factor^multiplicity == base.
struct Factorization {
  poly::Poly base;
  ff::FieldElem unit;
  std::vector<FactorEntry> factors;
  Source source = Source::Oracle;

  std::uint64_t n = 0;
  std::optional<ff::FieldElem> a;
  std::optional<poly::Poly> f;
  /// A multiple of every factor's order, when the producer knows one.
  std::optional<nt::BigInt> order_multiple;
  std::optional<std::variant<factor::BinomialPlan, factor::CompositionPlan>> plan;

  poly::Poly product() const;
  std::uint64_t factor_count() const;
  /// Sort by (degree, declared order, coefficients from the top down).
  void canonicalize();
};

/// Multiset key used to compare factorizations independently of order and
/// metadata: sorted (coefficient string, multiplicity) pairs.
std::vector<std::pair<std::string, std::uint64_t>> multiset(const Factorization& fz);

}  // namespace cyclofactor

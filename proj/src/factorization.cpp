#include "cyclofactor/factorization.hpp"

#include <algorithm>

namespace cyclofactor {

std::string_view to_string(Source s) {
  switch (s) {
    case Source::Binomial: return "binomial";
    case Source::Unity: return "unity";
    case Source::Cyclotomic: return "cyclotomic";
    case Source::Composition: return "composition";
    case Source::RadQ1: return "radq1";
    case Source::Shortcut: return "shortcut";
    case Source::Oracle: return "oracle";
  }
  return "unknown";
}

poly::Poly Factorization::product() const {
  poly::Poly out = poly::Poly::constant(unit);
  for (const auto& e : factors) out *= poly::pow(e.poly, e.multiplicity);
  return out;
}

std::uint64_t Factorization::factor_count() const {
  std::uint64_t n = 0;
  for (const auto& e : factors) n += e.multiplicity;
  return n;
}

void Factorization::canonicalize() {
  std::stable_sort(factors.begin(), factors.end(), [](const FactorEntry& a, const FactorEntry& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.declared_order != b.declared_order) return a.declared_order < b.declared_order;
    return poly::coeff_lex_less(a.poly, b.poly);
  });
}

std::vector<std::pair<std::string, std::uint64_t>> multiset(const Factorization& fz) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& e : fz.factors) out.emplace_back(poly::to_string(e.poly), e.multiplicity);
  std::sort(out.begin(), out.end());
  std::vector<std::pair<std::string, std::uint64_t>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  return merged;
}

}  // namespace cyclofactor

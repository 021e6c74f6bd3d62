#include "cyclofactor/verify.hpp"

#include "cyclofactor/butler.hpp"
#include "cyclofactor/error.hpp"
#include "cyclofactor/spin.hpp"

namespace cyclofactor {

namespace {

std::string describe(const FactorEntry& e) { return poly::to_string(e.poly); }

/// The polynomial f such that fz.base = f(X^n), if the census applies.
std::optional<poly::Poly> census_input(const Factorization& fz) {
  const auto fq = fz.base.field();
  if (fz.n == 0 || fz.n % fq.p() == 0) return std::nullopt;
  switch (fz.source) {
    case Source::Binomial:
    case Source::Unity:
    case Source::RadQ1:
    case Source::Shortcut:
      if (fz.a) return poly::Poly::linear(*fz.a);
      return std::nullopt;
    case Source::Composition:
      if (fz.f && !(fz.f->monic() == poly::Poly::x(fq))) return fz.f;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

VerifyReport verify(const Factorization& fz, const oracle::OracleConfig& cfg) {
  VerifyReport rep;
  if (!(fz.product() == fz.base)) {
    rep.product_ok = false;
    rep.failures.push_back("product does not reconstruct " + poly::to_string(fz.base));
  }
  for (const auto& e : fz.factors) {
    bool irreducible = false;
    try {
      irreducible = e.poly.is_monic() && oracle::is_irreducible(e.poly, cfg);
    } catch (const MathError& err) {
      rep.failures.push_back(describe(e) + ": " + err.what());
    }
    if (!irreducible) {
      rep.irreducible_ok = false;
      rep.failures.push_back(describe(e) + " is not monic irreducible");
      continue;
    }
    if (e.declared_degree != static_cast<std::uint64_t>(e.poly.degree())) {
      rep.degree_ok = false;
      rep.failures.push_back(describe(e) + " declared degree " + std::to_string(e.declared_degree));
    }
    if (e.declared_order != 0) {
      try {
        const auto actual = poly::poly_order(e.poly, fz.order_multiple);
        if (actual != e.declared_order) {
          rep.order_ok = false;
          rep.failures.push_back(describe(e) + " declared order " + std::to_string(e.declared_order) +
                                 ", actual " + actual.get_str());
        }
      } catch (const MathError& err) {
        rep.order_ok = false;
        rep.failures.push_back(describe(e) + ": " + err.what());
      }
    }
  }
  if (rep.product_ok && rep.irreducible_ok) {
    if (auto f = census_input(fz)) {
      rep.butler_checked = true;
      try {
        if (factor::histogram(factor::butler_profile(*f, fz.n)) != factor::histogram(fz)) {
          rep.butler_ok = false;
          rep.failures.push_back("degree/count/order census differs from the predicted profile");
        }
      } catch (const MathError& err) {
        rep.butler_ok = false;
        rep.failures.push_back(std::string("census: ") + err.what());
      }
    }
  }
  return rep;
}

VerifyReport verify_against_oracle(const Factorization& fz, const oracle::OracleConfig& cfg) {
  VerifyReport rep = verify(fz, cfg);
  rep.oracle_checked = true;
  const Factorization brute = oracle::brute_factor(fz.base, cfg);
  if (multiset(brute) != multiset(fz)) {
    rep.oracle_ok = false;
    rep.failures.push_back("factor multiset differs from the oracle");
  }
  return rep;
}

}  // namespace cyclofactor

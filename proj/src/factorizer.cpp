#include "cyclofactor/factorizer.hpp"

#include <map>
#include <numeric>

#include "cyclofactor/embedding.hpp"
#include "cyclofactor/error.hpp"
#include "cyclofactor/oracle.hpp"
#include "cyclofactor/spin.hpp"

namespace cyclofactor::factor {

using ff::Field;
using ff::FieldElem;
using poly::Poly;

namespace {

struct CharSplit {
  std::uint64_t reduced = 1;  // coprime to p
  std::uint64_t power = 1;    // p^l
  unsigned l = 0;
};

CharSplit split_char(std::uint64_t n, std::uint64_t p) {
  CharSplit c;
  c.l = nt::p_adic(n, p);
  c.power = nt::to_u64(nt::ipow(p, c.l));
  c.reduced = n / c.power;
  return c;
}

/// The unique p^l-th root, via the inverse of the Frobenius.
FieldElem char_root(const FieldElem& a, unsigned l) {
  const unsigned m = a.field().m();
  return a.frobenius((m - l % m) % m);
}

void require_positive(std::uint64_t n) {
  if (n == 0) fail(Errc::PreconditionViolated, "n must be positive");
}

void add_terms(Factorization& fz, const EngineResult& res, std::uint64_t mult) {
  for (const auto& t : res.terms) {
    FactorEntry e;
    e.poly = t.factor;
    e.multiplicity = mult;
    e.declared_degree = t.declared_degree;
    e.declared_order = t.declared_order;
    fz.factors.push_back(std::move(e));
  }
}

/// Phi_n over the prime subfield image in fq, by exact division.
Poly cyclotomic_poly(Field fq, std::uint64_t n) {
  static thread_local std::map<std::pair<const ff::FieldCtx*, std::uint64_t>, Poly> memo;
  const auto key = std::make_pair(&fq.ctx(), n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Poly out = Poly::binomial(n, fq.one());
  for (std::uint64_t d : nt::divisors(n)) {
    if (d != n) out = out / cyclotomic_poly(fq, d);
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

Factorization factor_radq1(const FieldElem& a, std::uint64_t n) {
  if (a.is_zero()) fail(Errc::ZeroElement, "binomial constant must be nonzero");
  require_positive(n);
  const Field fq = a.field();
  const std::uint64_t q = nt::to_u64(fq.size());
  if ((q - 1) % nt::radical(n) != 0) fail(Errc::RadicalNotDividing, "rad(n) does not divide q - 1");
  if (n % 4 == 0 && q % 4 != 1) fail(Errc::FourDividesConflict, "4 divides n while q = 3 mod 4");

  const std::uint64_t oa = nt::to_u64(ff::element_order(a));
  const auto split = nt::split_by_order(n, oa);
  const std::uint64_t d1 = std::gcd(split.n1, (q - 1) / oa);
  const std::uint64_t d2 = std::gcd(split.n2, q - 1);
  std::uint64_t r = 1;
  if (!a.is_one()) {
    const std::uint64_t mod = oa * d1;
    if (mod > 1) r = nt::inverse_mod(split.n2 % mod, mod).value();
    if (r == 0) r = 1;
  }
  const FieldElem b = ff::dth_root(a, d1);
  const FieldElem z1 = ff::primitive_root_of_unity(fq, d1);
  const FieldElem z2 = ff::primitive_root_of_unity(fq, d2);

  Factorization fz;
  fz.base = Poly::binomial(n, a);
  fz.unit = fq.one();
  fz.source = Source::RadQ1;
  fz.n = n;
  fz.a = a;
  fz.order_multiple = nt::BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(oa);
  const std::uint64_t K = split.n1 / d1;
  FieldElem zj = fq.one();
  for (std::uint64_t j = 0; j < d1; ++j, zj *= z1) {
    for (std::uint64_t v : nt::divisors(split.n2 / d2)) {
      const FieldElem beta = (zj * b).pow(r * v);
      FieldElem zi = fq.one();
      for (std::uint64_t i = 0; i < d2; ++i, zi *= z2) {
        if (std::gcd(i, v) != 1) continue;
        FactorEntry e;
        e.poly = Poly::binomial(K * v, zi * beta);
        e.declared_degree = K * v;
        e.declared_order = oa * split.n1 * v * (d2 / std::gcd(i, d2));
        fz.factors.push_back(std::move(e));
      }
    }
  }
  fz.canonicalize();
  return fz;
}

Factorization factor_binomial(const FieldElem& a, std::uint64_t n, const EngineOptions& opt) {
  if (a.is_zero()) fail(Errc::ZeroElement, "binomial constant must be nonzero");
  require_positive(n);
  const Field fq = a.field();
  const CharSplit cs = split_char(n, fq.p());
  const EngineResult res = run_engine(char_root(a, cs.l), cs.reduced, fq, opt);

  Factorization fz;
  fz.base = Poly::binomial(n, a);
  fz.unit = fq.one();
  fz.source = Source::Binomial;
  fz.n = n;
  fz.a = a;
  fz.order_multiple =
      nt::BigInt(static_cast<unsigned long>(cs.reduced)) * static_cast<unsigned long>(res.plan.order_a);
  add_terms(fz, res, cs.power);
  fz.plan = res.plan;
  fz.canonicalize();
  return fz;
}

Factorization factor_unity(Field fq, std::uint64_t n, const EngineOptions& opt) {
  Factorization fz = factor_binomial(fq.one(), n, opt);
  fz.source = Source::Unity;
  return fz;
}

Factorization factor_cyclotomic(Field fq, std::uint64_t n, const EngineOptions& opt) {
  require_positive(n);
  if (n % fq.p() == 0) fail(Errc::NotCoprimeToChar, "gcd(n, q) > 1");
  const auto primitive = [n](const BinomialPlan& plan, std::uint64_t v, std::uint64_t i) {
    return v == n / plan.d2_s && std::gcd(i, plan.d2_s) == 1;
  };
  const EngineResult res = run_engine(fq.one(), n, fq, opt, primitive);

  Factorization fz;
  fz.base = cyclotomic_poly(fq, n);
  fz.unit = fq.one();
  fz.source = Source::Cyclotomic;
  fz.n = n;
  fz.order_multiple = nt::BigInt(static_cast<unsigned long>(n));
  add_terms(fz, res, 1);
  fz.plan = res.plan;
  fz.canonicalize();
  return fz;
}

Factorization factor_composition(const Poly& f, std::uint64_t n, const EngineOptions& opt) {
  require_positive(n);
  if (f.degree() < 1 || !oracle::is_irreducible(f))
    fail(Errc::NotIrreducible, poly::to_string(f) + " is not irreducible");
  const Field fq = f.field();
  const FieldElem scale = f.lead();
  const Poly fm = f.monic();

  Factorization fz;
  fz.base = f.substitute_power(n);
  fz.unit = scale;
  fz.source = Source::Composition;
  fz.n = n;
  fz.f = f;

  if (fm == Poly::x(fq)) {
    FactorEntry e;
    e.poly = fm;
    e.multiplicity = n;
    e.declared_degree = 1;
    fz.factors.push_back(std::move(e));
    return fz;
  }

  const std::uint64_t k = static_cast<std::uint64_t>(fm.degree());
  FieldElem alpha;
  if (k == 1) {
    alpha = -fm.coeff(0);
  } else {
    const Field over = ff::make_extension(fq.p(), static_cast<unsigned>(fq.m() * k));
    alpha = poly::smallest_root(poly::lift(fm, over)).value();
  }
  const CharSplit cs = split_char(n, fq.p());
  const EngineResult res = run_engine(char_root(alpha, cs.l), cs.reduced, fq, opt);

  fz.order_multiple =
      nt::BigInt(static_cast<unsigned long>(cs.reduced)) * static_cast<unsigned long>(res.plan.order_a);
  add_terms(fz, res, cs.power);
  CompositionPlan plan;
  plan.f = fm;
  plan.k = k;
  plan.alpha = alpha;
  plan.inner = res.plan;
  plan.char_power = cs.power;
  if (!scale.is_one()) plan.scale = scale;
  fz.plan = plan;
  fz.canonicalize();
  return fz;
}

std::optional<Factorization> unity_shortcut(const FieldElem& a, std::uint64_t n) {
  if (a.is_zero()) fail(Errc::ZeroElement, "binomial constant must be nonzero");
  require_positive(n);
  const Field fq = a.field();
  const std::uint64_t q = nt::to_u64(fq.size());
  const std::uint64_t g = std::gcd(n, q - 1);
  if (!a.pow((q - 1) / g).is_one()) return std::nullopt;

  const FieldElem beta = ff::dth_root(a, n);
  const std::uint64_t oa = nt::to_u64(ff::element_order(a));
  const nt::BigInt multiple = nt::BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(oa);
  const Factorization unity = factor_unity(fq, n);

  Factorization fz;
  fz.base = Poly::binomial(n, a);
  fz.unit = fq.one();
  fz.source = Source::Shortcut;
  fz.n = n;
  fz.a = a;
  fz.order_multiple = multiple;
  const Poly x = Poly::x(fq);
  const Poly h = Poly::constant(beta);
  for (const auto& u : unity.factors) {
    FactorEntry e;
    e.poly = poly::q_transform(u.poly, x, h);
    e.multiplicity = u.multiplicity;
    e.declared_degree = u.declared_degree;
    e.declared_order = nt::to_u64(poly::poly_order(e.poly, multiple));
    fz.factors.push_back(std::move(e));
  }
  fz.canonicalize();
  return fz;
}

}  // namespace cyclofactor::factor

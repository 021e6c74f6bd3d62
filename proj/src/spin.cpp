#include "cyclofactor/spin.hpp"

#include "cyclofactor/error.hpp"
#include "cyclofactor/oracle.hpp"

namespace cyclofactor::poly {

namespace {

void require_subfield(Field f, Field base) {
  if (f.p() != base.p() || f.m() % base.m() != 0)
    fail(Errc::BaseNotSubfield, base.spec() + " is not a subfield of " + f.spec());
}

}  // namespace

Poly coeff_frobenius(const Poly& h, std::uint64_t j, Field base) {
  require_subfield(h.field(), base);
  const std::uint64_t shift = (j % (h.field().m() / base.m())) * base.m();
  if (shift == 0) return h;
  return h.map_frobenius(static_cast<unsigned>(shift));
}

std::uint64_t coeff_degree(const Poly& h, Field base) {
  require_subfield(h.field(), base);
  for (std::uint64_t j : nt::divisors(h.field().m() / base.m())) {
    if (coeff_frobenius(h, j, base) == h) return j;
  }
  fail(Errc::Internal, "coefficient degree not found");
}

Poly lift(const Poly& h, Field sup) {
  if (h.field() == sup) return h;
  const auto map = ff::embed(h.field(), sup);
  std::vector<FieldElem> out;
  out.reserve(h.coeffs().size());
  for (const auto& c : h.coeffs()) out.push_back(map.apply(c));
  return Poly(sup, std::move(out));
}

std::optional<Poly> descend(const Poly& h, Field base) {
  if (h.field() == base) return h;
  require_subfield(h.field(), base);
  const auto map = ff::embed(base, h.field());
  std::vector<FieldElem> out;
  out.reserve(h.coeffs().size());
  for (const auto& c : h.coeffs()) {
    auto x = map.preimage(c);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return Poly(base, std::move(out));
}

Poly spin_product(const Poly& h, Field base) {
  const std::uint64_t d = coeff_degree(h, base);
  Poly out = h;
  for (std::uint64_t j = 1; j < d; ++j) out *= coeff_frobenius(h, j, base);
  return out;
}

Poly q_spin(const Poly& h, Field base) {
  auto out = descend(spin_product(h, base), base);
  if (!out) fail(Errc::ImproperCoefficients, "spin does not descend to the base field");
  return *out;
}

Poly minimal_polynomial(const FieldElem& gamma, Field base) {
  const Field f = gamma.field();
  require_subfield(f, base);
  // Multiply out prod (Y - gamma^{q^u}) one linear factor at a time.
  std::vector<FieldElem> c{f.one()};
  FieldElem conj = gamma;
  const unsigned step = base.m();
  do {
    std::vector<FieldElem> next(c.size() + 1, f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= conj * c[i];
    }
    c = std::move(next);
    conj = conj.frobenius(step);
  } while (!(conj == gamma));
  auto out = descend(Poly(f, std::move(c)), base);
  if (!out) fail(Errc::ImproperCoefficients, "minimal polynomial does not descend");
  return *out;
}

nt::BigInt poly_order(const Poly& f_in, const std::optional<nt::BigInt>& multiple) {
  if (f_in.degree() < 1) fail(Errc::NotIrreducible, "constant polynomial has no order");
  const Poly f = f_in.monic();
  if (f.coeff(0).is_zero()) fail(Errc::RootAtZero, "f(0) = 0");
  if (!oracle::is_irreducible(f)) fail(Errc::NotIrreducible, to_string(f) + " is reducible");
  const Field fld = f.field();
  const Poly x = Poly::x(fld);
  nt::BigInt t;
  nt::BigFactorization fac;
  if (multiple) {
    t = *multiple;
    fac = nt::factor(t);
  } else {
    const std::uint64_t exp = static_cast<std::uint64_t>(fld.m()) * static_cast<std::uint64_t>(f.degree());
    t = nt::ipow(fld.p(), exp) - 1;
    fac = nt::factor_power_minus_one(fld.p(), exp);
  }
  const Poly one = Poly::constant(fld.one());
  if (!(pow_mod(x, t, f) == one)) fail(Errc::OrderNotDividing, "supplied multiple is not a multiple of the order");
  for (const auto& [pr, ex] : fac.factors) {
    for (unsigned i = 0; i < ex; ++i) {
      nt::BigInt cand = t / pr;
      if (!(pow_mod(x, cand, f) == one)) break;
      t = cand;
    }
  }
  return t;
}

}  // namespace cyclofactor::poly

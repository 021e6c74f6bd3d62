#include "cyclofactor/poly.hpp"

#include <algorithm>
#include <random>

#include "cyclofactor/error.hpp"

namespace cyclofactor::poly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_same(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) fail(Errc::CtxMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field f, std::vector<FieldElem> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == f)) fail(Errc::CtxMismatch, "coefficient from a different field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, std::size_t k) {
  std::vector<FieldElem> v(k + 1, c.field().zero());
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(Field f) { return monomial(f.one(), 1); }

Poly Poly::linear(const FieldElem& c) { return Poly(c.field(), {-c, c.field().one()}); }

Poly Poly::binomial(std::size_t n, const FieldElem& a) {
  Poly out = monomial(a.field().one(), n);
  out.c_[0] -= a;
  out.trim();
  return out;
}

Poly Poly::from_ints(Field f, const std::vector<std::int64_t>& low_to_high) {
  std::vector<FieldElem> v;
  v.reserve(low_to_high.size());
  for (auto c : low_to_high) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

FieldElem Poly::lead() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Field f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const std::size_t m = f.m(), na = a.c_.size(), nb = b.c_.size();
  const u64 p = f.p();
  const std::size_t width = 2 * m - 1;
  // Multiply as polynomials over F_p[y] and reduce each coefficient once.
  std::vector<u128> acc((na + nb - 1) * width, 0);
  for (std::size_t i = 0; i < na; ++i) {
    const auto& ai = a.c_[i].coords();
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      const auto& bj = b.c_[j].coords();
      u128* slot = &acc[(i + j) * width];
      for (std::size_t k = 0; k < m; ++k) {
        if (ai[k] == 0) continue;
        for (std::size_t l = 0; l < m; ++l) slot[k + l] += static_cast<u128>(ai[k]) * bj[l];
      }
    }
  }
  std::vector<FieldElem> out;
  out.reserve(na + nb - 1);
  std::vector<u64> wide(width);
  for (std::size_t i = 0; i < na + nb - 1; ++i) {
    for (std::size_t k = 0; k < width; ++k) wide[k] = static_cast<u64>(acc[i * width + k] % p);
    out.push_back(f.reduce(wide));
  }
  return Poly(f, std::move(out));
}

Poly operator*(Poly a, const FieldElem& s) {
  if (!(a.field() == s.field())) fail(Errc::CtxMismatch, "scalar from a different field");
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

bool operator==(const Poly& a, const Poly& b) { return a.field() == b.field() && a.c_ == b.c_; }

FieldElem Poly::eval(const FieldElem& x) const {
  if (!(x.field() == field_)) fail(Errc::CtxMismatch, "evaluation point from a different field");
  FieldElem acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<FieldElem> out;
  for (std::size_t i = 1; i < c_.size(); ++i)
    out.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.p())));
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (c_.empty() || is_monic()) return *this;
  return *this * lead().inv();
}

Poly Poly::substitute_power(std::size_t k) const {
  if (k == 0) fail(Errc::Internal, "substitution exponent must be positive");
  if (c_.empty() || k == 1) return *this;
  std::vector<FieldElem> out((c_.size() - 1) * k + 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return Poly(field_, std::move(out));
}

Poly Poly::map_frobenius(unsigned k) const {
  Poly out = *this;
  for (auto& c : out.c_) c = c.frobenius(k);
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) fail(Errc::DivByZero, "polynomial division by zero");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t m = f.m();
  const u64 p = f.p();
  const auto& bc = b.coeffs();
  const FieldElem lead_inv = b.lead().inv();
  const bool monic = b.is_monic();
  std::vector<FieldElem> rem = a.coeffs();
  std::vector<FieldElem> quot(rem.size() - db, f.zero());
  if (m == 1) {
    std::vector<u64> r(rem.size()), bb(bc.size()), qq(quot.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rem[i].coords()[0];
    for (std::size_t i = 0; i < bb.size(); ++i) bb[i] = bc[i].coords()[0];
    const u64 li = lead_inv.coords()[0];
    for (std::size_t i = r.size(); i-- > db;) {
      const u64 t = monic ? r[i] : nt::mul_mod(r[i], li, p);
      qq[i - db] = t;
      if (t == 0) continue;
      const u64 neg = p - t;
      for (std::size_t j = 0; j < db; ++j)
        r[i - db + j] = static_cast<u64>((r[i - db + j] + static_cast<u128>(neg) * bb[j]) % p);
      r[i] = 0;
    }
    for (std::size_t i = 0; i < quot.size(); ++i) quot[i] = f.from_coords({qq[i]});
    for (std::size_t i = 0; i < r.size(); ++i) rem[i] = f.from_coords({r[i]});
  } else {
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i].is_zero()) continue;
      const FieldElem t = monic ? rem[i] : rem[i] * lead_inv;
      quot[i - db] = t;
      for (std::size_t j = 0; j < db; ++j) {
        if (!bc[j].is_zero()) rem[i - db + j] -= t * bc[j];
      }
      rem[i] = f.zero();
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

Poly gcd(const Poly& a_in, const Poly& b_in) {
  require_same(a_in, b_in);
  Poly a = a_in, b = b_in;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& a, std::uint64_t e) {
  Poly result = Poly::constant(a.field().one());
  Poly base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly pow_mod(const Poly& a, const nt::BigInt& e, const Poly& mod) {
  if (e < 0) fail(Errc::Internal, "negative exponent");
  Poly result = Poly::constant(a.field().one()) % mod;
  if (e == 0) return result;
  const Poly base = a % mod;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % mod;
  }
  return result;
}

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& mod) {
  return pow_mod(a, nt::BigInt(static_cast<unsigned long>(e)), mod);
}

Poly frobenius_x_mod(const Poly& mod, unsigned k) {
  Poly r = Poly::x(mod.field()) % mod;
  for (unsigned i = 0; i < k; ++i) r = pow_mod(r, mod.field().p(), mod);
  return r;
}

namespace {

// Split a squarefree product of distinct linear factors into its roots.
void split_linear(const Poly& g, std::vector<FieldElem>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) * g.lead().inv());
    return;
  }
  const Field f = g.field();
  const Poly x = Poly::x(f);
  const Poly one = Poly::constant(f.one());
  const nt::BigInt half = (f.size() - 1) / 2;
  // Each random shift splits with probability >= 1/2; the root set returned
  // does not depend on which shift succeeds.
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<std::uint64_t>(g.degree()));
  while (true) {
    ff::Coords c(f.m());
    for (auto& v : c) v = rng() % f.p();
    const FieldElem delta = f.from_coords(std::move(c));
    Poly h(f);
    if (f.p() == 2) {
      // Absolute trace of delta*X modulo g.
      const Poly dx = Poly::constant(delta) * x % g;
      Poly term = dx, sum = dx;
      for (unsigned i = 1; i < f.m(); ++i) {
        term = (term * term) % g;
        sum += term;
      }
      h = gcd(g, sum);
    } else {
      h = gcd(g, pow_mod(x + Poly::constant(delta), half, g) - one);
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(g / h, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElem> find_roots(const Poly& f_in) {
  if (f_in.is_zero()) fail(Errc::DivByZero, "roots of the zero polynomial");
  std::vector<FieldElem> out;
  Poly f = f_in.monic();
  if (f.degree() <= 0) return out;
  const Field fld = f.field();
  if (f.coeff(0).is_zero()) {
    out.push_back(fld.zero());
    std::size_t k = 0;
    while (f.coeff(k).is_zero()) ++k;
    std::vector<FieldElem> shifted(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end());
    f = Poly(fld, std::move(shifted));
  }
  if (f.degree() > 0) {
    const Poly xq = frobenius_x_mod(f, fld.m());
    const Poly g = gcd(f, xq - Poly::x(fld));
    split_linear(g, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FieldElem> smallest_root(const Poly& f) {
  auto roots = find_roots(f);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

Poly q_transform(const Poly& f, const Poly& g, const Poly& h) {
  require_same(f, g);
  require_same(f, h);
  if (h.is_zero()) fail(Errc::DivByZero, "Q-transform with zero denominator");
  const Field fld = f.field();
  if (f.is_zero()) return Poly(fld);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<Poly> hp{Poly::constant(fld.one())};
  for (std::size_t i = 1; i <= n; ++i) hp.push_back(hp.back() * h);
  Poly out(fld), gp = Poly::constant(fld.one());
  for (std::size_t i = 0; i <= n; ++i) {
    out += gp * hp[n - i] * f.coeff(i);
    gp *= g;
  }
  return out;
}

bool coeff_lex_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto cmp = a.coeffs()[i] <=> b.coeffs()[i];
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

}  // namespace cyclofactor::poly

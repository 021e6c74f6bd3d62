#include "cyclofactor/oracle.hpp"

#include <random>

#include "cyclofactor/error.hpp"

namespace cyclofactor::oracle {

using poly::Poly;

namespace {

// h^|F| mod f
Poly power_q(const Poly& h, const Poly& f) { return pow_mod(h, f.field().size(), f); }

bool is_one(const Poly& g) { return g.degree() == 0; }

void guard(const Poly& f, const OracleConfig& cfg) {
  if (f.degree() > static_cast<long>(cfg.max_total_degree))
    fail(Errc::DegreeGuard, "degree " + std::to_string(f.degree()) + " exceeds the oracle guard");
}

Poly pth_root(const Poly& c) {
  const auto fld = c.field();
  const std::uint64_t p = fld.p();
  std::vector<poly::FieldElem> out;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) out.push_back(c.coeffs()[i].frobenius(fld.m() - 1));
  return Poly(fld, std::move(out));
}

Poly random_poly(ff::Field fld, std::size_t below, std::mt19937_64& rng) {
  std::vector<poly::FieldElem> c;
  c.reserve(below);
  std::uniform_int_distribution<std::uint64_t> dist(0, fld.p() - 1);
  for (std::size_t i = 0; i < below; ++i) {
    ff::Coords v(fld.m());
    for (auto& x : v) x = dist(rng);
    c.push_back(fld.from_coords(std::move(v)));
  }
  return Poly(fld, std::move(c));
}

void edf_rec(const Poly& f, std::uint64_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() <= static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const auto fld = f.field();
  const Poly one = Poly::constant(fld.one());
  while (true) {
    const Poly a = random_poly(fld, static_cast<std::size_t>(f.degree()), rng);
    if (a.degree() < 1) continue;
    Poly g(fld);
    if (fld.p() == 2) {
      Poly t = a % f, sum = t;
      const std::uint64_t steps = static_cast<std::uint64_t>(fld.m()) * d;
      for (std::uint64_t i = 1; i < steps; ++i) {
        t = (t * t) % f;
        sum += t;
      }
      g = gcd(f, sum);
    } else {
      nt::BigInt qd;
      mpz_pow_ui(qd.get_mpz_t(), fld.size().get_mpz_t(), d);
      const nt::BigInt e = (qd - 1) / 2;
      g = gcd(f, pow_mod(a, e, f) - one);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf_rec(g, d, rng, out);
      edf_rec(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f_in, const OracleConfig& cfg) {
  if (f_in.degree() < 1) return false;
  guard(f_in, cfg);
  const Poly f = f_in.monic();
  const std::uint64_t d = static_cast<std::uint64_t>(f.degree());
  if (d == 1) return true;
  const Poly x = Poly::x(f.field());
  const auto primes = nt::factor(d).primes();
  Poly h = x % f;
  for (std::uint64_t i = 1; i <= d; ++i) {
    h = power_q(h, f);
    for (auto l : primes) {
      if (i == d / l && !is_one(gcd(f, h - x))) return false;
    }
  }
  return h == x % f;
}

std::vector<PowerFactor> square_free(const Poly& f_in) {
  std::vector<PowerFactor> out;
  if (f_in.degree() < 1) return out;
  const Poly f = f_in.monic();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  std::uint64_t i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac, i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const std::uint64_t p = f.field().p();
    for (auto& pf : square_free(pth_root(c))) out.push_back({pf.poly, pf.multiplicity * p});
  }
  return out;
}

std::vector<DegreeBlock> distinct_degree(const Poly& f_in) {
  std::vector<DegreeBlock> out;
  Poly f = f_in.monic();
  const Poly x = Poly::x(f.field());
  Poly h = x % f;
  std::uint64_t i = 1;
  while (f.degree() >= 2 * static_cast<long>(i)) {
    h = power_q(h, f);
    Poly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.push_back({f, static_cast<std::uint64_t>(f.degree())});
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, std::uint64_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  edf_rec(f.monic(), d, rng, out);
  return out;
}

Factorization brute_factor(const Poly& f, const OracleConfig& cfg) {
  if (f.is_zero()) fail(Errc::DivByZero, "cannot factor the zero polynomial");
  guard(f, cfg);
  Factorization fz;
  fz.base = f;
  fz.unit = f.lead();
  fz.source = Source::Oracle;
  std::mt19937_64 rng(cfg.rng_seed);
  for (const auto& part : square_free(f)) {
    for (const auto& block : distinct_degree(part.poly)) {
      std::vector<Poly> pieces;
      edf_rec(block.poly, block.degree, rng, pieces);
      for (auto& piece : pieces) {
        FactorEntry e;
        e.declared_degree = static_cast<std::uint64_t>(piece.degree());
        e.poly = std::move(piece);
        e.multiplicity = part.multiplicity;
        fz.factors.push_back(std::move(e));
      }
    }
  }
  fz.canonicalize();
  return fz;
}

}  // namespace cyclofactor::oracle

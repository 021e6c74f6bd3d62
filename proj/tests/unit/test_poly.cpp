#include <doctest.h>

#include <random>

#include "cyclofactor/oracle.hpp"
#include "cyclofactor/poly.hpp"
#include "cyclofactor/spin.hpp"
#include "helpers.hpp"

using namespace cyclofactor;
using ff::Field;
using ff::FieldElem;
using poly::Poly;
using testing::code_of;

namespace {

Poly P(Field f, const char* s) { return poly::parse_poly(f, s); }

Poly random_poly(Field f, std::size_t deg, std::mt19937_64& rng, bool monic) {
  std::vector<FieldElem> c;
  for (std::size_t i = 0; i <= deg; ++i) {
    ff::Coords v(f.m());
    for (auto& x : v) x = rng() % f.p();
    c.push_back(f.from_coords(std::move(v)));
  }
  if (monic) c.back() = f.one();
  return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("arithmetic") {
  const Field f2 = ff::prime_field(2), f3 = ff::prime_field(3), f5 = ff::prime_field(5);
  CHECK(P(f2, "x + 1") * P(f2, "x + 1") == P(f2, "x^2 + 1"));
  CHECK(poly::gcd(P(f5, "x^2 - 1"), P(f5, "x - 1")) == P(f5, "x - 1"));
  CHECK(P(f3, "x^2 + 1").eval(f3.from_int(2)) == f3.from_int(2));
  CHECK(code_of([&] { (void)(P(f3, "x") % Poly(f3)); }) == Errc::DivByZero);
  CHECK(code_of([&] { (void)(P(f3, "x") + P(f5, "x")); }) == Errc::CtxMismatch);
  CHECK(Poly(f3).degree() == -1);

  std::mt19937_64 rng(3);
  for (Field f : {f2, f5, ff::make_extension(3, 2), ff::make_extension(2, 5)}) {
    for (int i = 0; i < 60; ++i) {
      const Poly a = random_poly(f, rng() % 12, rng, false);
      const Poly b = random_poly(f, rng() % 6, rng, true);
      const auto [q, r] = poly::divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      const Poly c = random_poly(f, 3, rng, true);
      const Poly g = poly::gcd(a * c, b * c);
      CHECK(g.is_monic());
      CHECK((a * c % g).is_zero());
      CHECK((b * c % g).is_zero());
      CHECK((g % c).is_zero());
      CHECK(poly::pow_mod(a, std::uint64_t{13}, b) == poly::pow(a, 13) % b);
    }
  }
}

TEST_CASE("text round trip") {
  const Field f9 = ff::make_extension(3, 2), f5 = ff::prime_field(5);
  CHECK(poly::to_string(P(f5, "x^2 - 1")) == "x^2 + 4");
  CHECK(poly::to_string(P(f5, "2x^3 + x")) == "2*x^3 + x");
  CHECK(poly::to_string(Poly(f5)) == "0");
  CHECK(poly::to_string(P(f9, "[1,0]*x + [0,1]")) == "[1,0]*x + [0,1]");
  CHECK(poly::to_string(P(f9, "X^2 + 1")) == "x^2 + [0,1]");
  std::mt19937_64 rng(5);
  for (Field f : {f5, f9, ff::make_extension(2, 3)})
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_poly(f, rng() % 7, rng, false);
      CHECK(poly::parse_poly(f, poly::to_string(a)) == a);
    }
  CHECK_THROWS_AS(poly::parse_poly(f5, "x^^2"), ParseError);
  CHECK_THROWS_AS(poly::parse_element(f9, "[1,2,0]"), ParseError);
  CHECK_THROWS_AS(poly::parse_element(f9, "[1,3]"), ParseError);
  CHECK(poly::parse_field("9") == f9);
  CHECK(poly::parse_field("3^2") == f9);
  CHECK(poly::parse_field("3^2/1,0,1") == f9);
  CHECK(poly::parse_field("2^2/1,1,1").modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(code_of([] { poly::parse_field("6"); }) == Errc::NotPrime);
  CHECK_THROWS_AS(poly::parse_field("3^"), ParseError);
}

TEST_CASE("coefficient Frobenius and coefficient degree") {
  const Field f3 = ff::prime_field(3), f9 = ff::make_extension(3, 2);
  const Field f2 = ff::prime_field(2), f4 = ff::make_extension(2, 2);
  const Poly h = P(f3, "x^2 + 2x + 1");
  CHECK(poly::coeff_frobenius(h, 5, f3) == h);

  const FieldElem g = f9.generator();
  const Poly lin = Poly::linear(g);
  CHECK(poly::coeff_frobenius(lin, 1, f3) == Poly::linear(g.pow(std::uint64_t{3})));
  CHECK(poly::coeff_frobenius(lin, 0, f3) == lin);
  CHECK(poly::coeff_degree(Poly::linear(f4.generator()), f2) == 2);
  CHECK(poly::coeff_degree(P(f9, "x^2 + 1"), f3) == 1);
  CHECK(poly::coeff_degree(P(f3, "x + 1"), f3) == 1);
  CHECK(code_of([&] { poly::coeff_degree(lin, f4); }) == Errc::BaseNotSubfield);

  std::mt19937_64 rng(9);
  const Field f81 = ff::make_extension(3, 4);
  for (int i = 0; i < 30; ++i) {
    const Poly a = random_poly(f81, 4, rng, true), b = random_poly(f81, 3, rng, false);
    CHECK(poly::coeff_frobenius(a * b, 1, f3) == poly::coeff_frobenius(a, 1, f3) * poly::coeff_frobenius(b, 1, f3));
    CHECK(poly::coeff_frobenius(a + b, 3, f9) == poly::coeff_frobenius(a, 3, f9) + poly::coeff_frobenius(b, 3, f9));
    CHECK(poly::coeff_frobenius(a, 1 + 4, f3) == poly::coeff_frobenius(a, 1, f3));
    CHECK(f81.m() % poly::coeff_degree(a, f3) == 0);
  }
}

TEST_CASE("q-spins") {
  const Field f2 = ff::prime_field(2), f4 = ff::make_extension(2, 2), f5 = ff::prime_field(5);
  CHECK(poly::q_spin(P(f5, "x - 3"), f5) == P(f5, "x - 3"));
  CHECK(poly::q_spin(Poly::linear(f4.generator()), f2) == P(f2, "x^2 + x + 1"));

  std::mt19937_64 rng(13);
  for (auto [p, e, m] : {std::tuple{2ULL, 1U, 6U}, {3ULL, 1U, 4U}, {2ULL, 2U, 6U}, {5ULL, 1U, 2U}}) {
    const Field base = ff::make_extension(p, e), top = ff::make_extension(p, m);
    for (int i = 0; i < 20; ++i) {
      const nt::BigInt idx = nt::BigInt(static_cast<unsigned long>(rng() % 1000 + 1)) % top.size();
      const Poly h = Poly::linear(top.element_at(idx));
      const Poly s = poly::q_spin(h, base);
      CHECK(poly::coeff_degree(poly::lift(s, top), base) == 1);
      CHECK(oracle::is_irreducible(s));
      CHECK(s == poly::minimal_polynomial(h.coeff(0) * top.from_int(-1), base));
    }
  }
}

TEST_CASE("polynomial order") {
  const Field f3 = ff::prime_field(3);
  CHECK(poly::poly_order(P(f3, "x - 1")) == 1);
  CHECK(poly::poly_order(P(f3, "x + 1")) == 2);
  CHECK(poly::poly_order(P(f3, "x^2 + 1")) == 4);
  CHECK(code_of([&] { poly::poly_order(P(f3, "x^2 + x")); }) == Errc::RootAtZero);
  CHECK(code_of([&] { poly::poly_order(P(f3, "x^2 - 1")); }) == Errc::NotIrreducible);

  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::uint64_t deg = 1; deg <= 4; ++deg) {
      const Field f = poly::parse_field(std::to_string(q));
      // all monic irreducibles of this degree
      const nt::BigInt count = nt::ipow(q, deg);
      for (nt::BigInt idx = 0; idx < count; ++idx) {
        std::vector<FieldElem> c;
        nt::BigInt rest = idx;
        for (std::uint64_t i = 0; i < deg; ++i) {
          c.push_back(f.element_at(nt::BigInt(rest % q)));
          rest /= q;
        }
        c.push_back(f.one());
        const Poly g(f, std::move(c));
        if (g.coeff(0).is_zero() || !oracle::is_irreducible(g)) continue;
        const auto e = poly::poly_order(g);
        CHECK((nt::ipow(q, deg) - 1) % e == 0);
        const Poly xe = poly::pow_mod(Poly::x(f), e, g);
        CHECK(xe == Poly::constant(f.one()));
        // least such e, by exhaustive search
        std::uint64_t t = 1;
        Poly xt = Poly::x(f) % g;
        while (!(xt == Poly::constant(f.one()))) {
          xt = xt * Poly::x(f) % g;
          ++t;
        }
        CHECK(e == t);
      }
    }
}

TEST_CASE("Q-transform") {
  const Field f3 = ff::prime_field(3), f7 = ff::prime_field(7);
  const Poly one = Poly::constant(f3.one());
  CHECK(poly::q_transform(P(f3, "x - 1"), P(f3, "x^5"), one) == P(f3, "x^5 - 1"));
  CHECK(poly::q_transform(P(f3, "x^2 + 1"), P(f3, "x^2"), one) == P(f3, "x^4 + 1"));
  const Poly g = P(f7, "x^3 + 2x + 5"), h = P(f7, "3x + 1");
  CHECK(poly::q_transform(P(f7, "x - 4"), g, h) == g - h * f7.from_int(4));
  // Q = X / beta
  const FieldElem beta = f7.from_int(3);
  const Poly r = P(f7, "x^2 + x + 3");
  CHECK(poly::q_transform(r, Poly::x(f7), Poly::constant(beta)) == P(f7, "x^2 + 3x + 27"));
  CHECK(code_of([&] { poly::q_transform(r, g, Poly(f7)); }) == Errc::DivByZero);
}

TEST_CASE("roots") {
  const Field f5 = ff::prime_field(5);
  const auto roots = poly::find_roots(P(f5, "x^4 - 1"));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == f5.from_int(1));
  CHECK(roots[3] == f5.from_int(4));
  CHECK(poly::find_roots(P(f5, "x^2 - 2")).empty());

  for (auto [p, m] : {std::pair{2ULL, 4U}, {3ULL, 3U}, {7ULL, 2U}}) {
    const Field f = ff::make_extension(p, m);
    std::mt19937_64 rng(p * 100 + m);
    for (int i = 0; i < 10; ++i) {
      const Poly a = random_poly(f, 5, rng, true);
      std::vector<FieldElem> brute;
      for (nt::BigInt j = 0; j < f.size(); ++j)
        if (a.eval(f.element_at(j)).is_zero()) brute.push_back(f.element_at(j));
      CHECK(poly::find_roots(a) == brute);
    }
  }
}

TEST_CASE("spin transitivity on a small tower") {
  const Field f2 = ff::prime_field(2), f4 = ff::make_extension(2, 2), f16 = ff::make_extension(2, 4);
  for (nt::BigInt i = 2; i < 16; ++i) {
    const Poly h = Poly::linear(f16.element_at(i));
    if (poly::coeff_degree(h, f2) != 4) continue;
    CHECK(poly::q_spin(h, f2) == poly::q_spin(poly::q_spin(h, f4), f2));
  }
}

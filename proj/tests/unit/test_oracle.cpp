#include <doctest.h>

#include "cyclofactor/oracle.hpp"
#include "helpers.hpp"

using namespace cyclofactor;
using ff::Field;
using poly::Poly;
using testing::code_of;

namespace {

Poly P(Field f, const char* s) { return poly::parse_poly(f, s); }

using Multiset = std::vector<std::pair<std::string, std::uint64_t>>;

}  // namespace

TEST_CASE("irreducibility") {
  const Field f3 = ff::prime_field(3);
  CHECK(oracle::is_irreducible(P(f3, "x^2 + 1")));
  CHECK_FALSE(oracle::is_irreducible(P(f3, "x^2 - 1")));
  CHECK(oracle::is_irreducible(P(f3, "x")));
  CHECK_FALSE(oracle::is_irreducible(P(f3, "2")));
  CHECK(oracle::is_irreducible(P(f3, "2x + 1")));
  oracle::OracleConfig small;
  small.max_total_degree = 10;
  CHECK(code_of([&] { oracle::is_irreducible(Poly::binomial(11, f3.one()), small); }) == Errc::DegreeGuard);

  // Counts of monic irreducibles of degree d over F_q: (1/d) sum mu(d/e) q^e.
  for (std::uint64_t q : {2, 3, 4})
    for (std::uint64_t d = 1; d <= 5; ++d) {
      const Field f = poly::parse_field(std::to_string(q));
      std::uint64_t found = 0;
      const std::uint64_t total = nt::to_u64(nt::ipow(q, d));
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<ff::FieldElem> c;
        std::uint64_t rest = idx;
        for (std::uint64_t i = 0; i < d; ++i, rest /= q) c.push_back(f.element_at(nt::BigInt(static_cast<unsigned long>(rest % q))));
        c.push_back(f.one());
        found += oracle::is_irreducible(Poly(f, std::move(c)));
      }
      static const int mu[] = {0, 1, -1, -1, 0, -1};
      long long sum = 0;
      for (std::uint64_t e = 1; e <= d; ++e)
        if (d % e == 0) sum += mu[d / e] * nt::to_u64(nt::ipow(q, e));
      CHECK(found == static_cast<std::uint64_t>(sum) / d);
    }
}

TEST_CASE("brute-force factorization") {
  const Field f3 = ff::prime_field(3);
  CHECK(multiset(oracle::brute_factor(P(f3, "x^2 - 1"))) == Multiset{{"x + 1", 1}, {"x + 2", 1}});
  CHECK(multiset(oracle::brute_factor(Poly::binomial(8, f3.one()))) ==
        Multiset{{"x + 1", 1}, {"x + 2", 1}, {"x^2 + 1", 1}, {"x^2 + 2*x + 2", 1}, {"x^2 + x + 2", 1}});
  CHECK(multiset(oracle::brute_factor(P(f3, "x^4 + 1"))) == Multiset{{"x^2 + 2*x + 2", 1}, {"x^2 + x + 2", 1}});

  // Multiplicities, including the p-th power part.
  CHECK(multiset(oracle::brute_factor(poly::pow(P(f3, "x - 1"), 2))) == Multiset{{"x + 2", 2}});
  const Field f9 = ff::make_extension(3, 2);
  const auto a = f9.generator();
  const auto fz = oracle::brute_factor(Poly::binomial(3, a));
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].multiplicity == 3);
  CHECK(fz.product() == Poly::binomial(3, a));

  const Field f2 = ff::prime_field(2);
  const Poly messy = poly::pow(P(f2, "x^2 + x + 1"), 4) * poly::pow(P(f2, "x + 1"), 3) * P(f2, "x^2") * P(f2, "x^3 + x + 1");
  const auto mf = oracle::brute_factor(messy);
  CHECK(mf.product() == messy);
  CHECK(multiset(mf) == Multiset{{"x", 2}, {"x + 1", 3}, {"x^2 + x + 1", 4}, {"x^3 + x + 1", 1}});

  // Non-monic input keeps its leading coefficient as the unit.
  const Field f5 = ff::prime_field(5);
  const auto nm = oracle::brute_factor(P(f5, "3x^2 - 3"));
  CHECK(nm.unit == f5.from_int(3));
  CHECK(nm.product() == P(f5, "3x^2 - 3"));
}

TEST_CASE("products and irreducible pieces over several fields") {
  for (std::uint64_t q : {2, 4, 5, 8, 9})
    for (std::uint64_t n = 1; n <= 40; n += 3) {
      const Field f = poly::parse_field(std::to_string(q));
      const Poly g = Poly::binomial(n, f.x() + f.one());
      const auto fz = oracle::brute_factor(g);
      CHECK(fz.product() == g);
      for (const auto& e : fz.factors) CHECK(oracle::is_irreducible(e.poly));
    }
}

TEST_CASE("seed determinism") {
  const Field f7 = ff::prime_field(7);
  const Poly g = Poly::binomial(48, f7.from_int(3));
  oracle::OracleConfig a, b, c;
  b.rng_seed = a.rng_seed;
  c.rng_seed = 99;
  const auto fa = oracle::brute_factor(g, a), fb = oracle::brute_factor(g, b), fc = oracle::brute_factor(g, c);
  REQUIRE(fa.factors.size() == fb.factors.size());
  for (std::size_t i = 0; i < fa.factors.size(); ++i) CHECK(fa.factors[i].poly == fb.factors[i].poly);
  CHECK(multiset(fa) == multiset(fc));
}

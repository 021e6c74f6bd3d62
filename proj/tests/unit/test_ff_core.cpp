#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "cyclofactor/embedding.hpp"
#include "cyclofactor/field.hpp"
#include "helpers.hpp"

using namespace cyclofactor;
using ff::Field;
using ff::FieldElem;
using testing::code_of;

namespace {

// Monic polynomials low -> high with a product that is reducible, by brute
// multiplication of all lower-degree monic pairs.
std::set<std::vector<std::uint64_t>> reducible_monic(std::uint64_t p, unsigned m) {
  std::vector<std::vector<std::vector<std::uint64_t>>> monic(m + 1);
  for (unsigned d = 1; d < m; ++d) {
    std::vector<std::uint64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      monic[d].push_back(c);
      unsigned i = 0;
      while (i < d && ++c[i] == p) c[i++] = 0;
      if (i == d) break;
    }
  }
  std::set<std::vector<std::uint64_t>> out;
  for (unsigned d = 1; d <= m / 2; ++d)
    for (const auto& a : monic[d])
      for (const auto& b : monic[m - d]) {
        std::vector<std::uint64_t> prod(m + 1, 0);
        for (unsigned i = 0; i <= d; ++i)
          for (unsigned j = 0; j <= m - d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        out.insert(prod);
      }
  return out;
}

// Lex-smallest tail (a_{m-1}, ..., a_0) not in the reducible set.
std::vector<std::uint64_t> brute_smallest_irreducible(std::uint64_t p, unsigned m) {
  const auto bad = reducible_monic(p, m);
  std::vector<std::uint64_t> tail(m, 0);  // tail[0] = a_{m-1}
  while (true) {
    std::vector<std::uint64_t> poly(m + 1, 0);
    poly[m] = 1;
    for (unsigned i = 0; i < m; ++i) poly[m - 1 - i] = tail[i];
    if (m == 1 || !bad.count(poly)) return poly;
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && ++tail[static_cast<unsigned>(i)] == p) tail[static_cast<unsigned>(i--)] = 0;
  }
}

std::uint64_t brute_order(const FieldElem& x) {
  FieldElem y = x;
  for (std::uint64_t t = 1;; ++t) {
    if (y.is_one()) return t;
    y *= x;
  }
}

FieldElem random_elem(Field f, std::mt19937_64& rng) {
  ff::Coords c(f.m());
  for (auto& v : c) v = rng() % f.p();
  return f.from_coords(std::move(c));
}

}  // namespace

TEST_CASE("field construction") {
  const Field f2 = ff::make_extension(2, 1);
  CHECK(f2.modulus() == std::vector<std::uint64_t>{0, 1});
  const Field f9 = ff::make_extension(3, 2);
  CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(code_of([] { ff::make_extension(4, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { ff::make_extension(3, 2, std::vector<std::uint64_t>{2, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { ff::make_extension(3, 2, std::vector<std::uint64_t>{1, 1}); }) == Errc::DegreeMismatch);
  CHECK(ff::make_extension(3, 2) == f9);
  CHECK(f9.spec() == "3^2/1,0,1");

  for (auto [p, m] : {std::pair{2ULL, 2U}, {2ULL, 3U}, {2ULL, 4U}, {2ULL, 6U}, {3ULL, 2U}, {3ULL, 3U},
                      {3ULL, 4U}, {5ULL, 2U}, {5ULL, 3U}, {7ULL, 2U}, {7ULL, 3U}, {11ULL, 2U}})
    CHECK(ff::make_extension(p, m).modulus() == brute_smallest_irreducible(p, m));

  const Field other = ff::make_extension(2, 2, std::vector<std::uint64_t>{1, 1, 1});
  CHECK(other.size() == 4);
}

TEST_CASE("arithmetic and contexts") {
  const Field f9 = ff::make_extension(3, 2);
  const Field f4 = ff::make_extension(2, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_elem(f9, rng), b = random_elem(f9, rng), c = random_elem(f9, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == f9.zero());
    if (!a.is_zero()) CHECK(a * a.inv() == f9.one());
    CHECK(a.pow(std::uint64_t{9}) == a.frobenius(2));
    CHECK(a.pow(std::uint64_t{3}) == a.frobenius(1));
  }
  CHECK(code_of([&] { (void)(f9.one() + f4.one()); }) == Errc::CtxMismatch);
  CHECK(code_of([&] { (void)f9.zero().inv(); }) == Errc::DivByZero);
  CHECK(f9.x().to_string() == "[1,0]");
  CHECK(ff::prime_field(7).from_int(-1).to_string() == "6");
  CHECK(f9.element_at(nt::BigInt(5)).to_string() == "[1,2]");
}

TEST_CASE("element orders") {
  const Field f7 = ff::prime_field(7);
  const Field f5 = ff::prime_field(5);
  CHECK(ff::element_order(f7.one()) == 1);
  CHECK(ff::element_order(f7.from_int(3)) == 6);
  CHECK(ff::element_order(f5.from_int(4)) == 2);
  CHECK(code_of([&] { ff::element_order(f7.zero()); }) == Errc::ZeroElement);

  for (auto [p, m] : {std::pair{2ULL, 4U}, {3ULL, 3U}, {5ULL, 2U}, {13ULL, 1U}, {2ULL, 5U}}) {
    const Field f = ff::make_extension(p, m);
    for (nt::BigInt i = 1; i < f.size(); ++i) {
      const auto x = f.element_at(i);
      CHECK(ff::element_order(x) == brute_order(x));
    }
    CHECK(ff::element_order(f.generator()) == f.group_order());
  }

  // Large field: order via the divide-out method only.
  const Field big = ff::make_extension(2, 174);
  const auto g = big.generator();
  CHECK(ff::element_order(g) == big.group_order());
  CHECK(g.pow(big.group_order()).is_one());
}

TEST_CASE("roots of unity") {
  const Field f5 = ff::prime_field(5);
  CHECK(ff::primitive_root_of_unity(ff::prime_field(11), std::uint64_t{1}).is_one());
  CHECK(ff::primitive_root_of_unity(f5, std::uint64_t{4}) == f5.from_int(2));
  CHECK(code_of([] { ff::primitive_root_of_unity(ff::prime_field(3), std::uint64_t{4}); }) ==
        Errc::OrderNotDividing);
  for (auto [p, m] : {std::pair{2ULL, 6U}, {3ULL, 4U}, {7ULL, 2U}, {2ULL, 58U}}) {
    const Field f = ff::make_extension(p, m);
    for (std::uint64_t d = 1; d <= 100; ++d) {
      if (f.group_order() % d != 0) continue;
      const auto z = ff::primitive_root_of_unity(f, d);
      CHECK(z.pow(d).is_one());
      CHECK(ff::element_order(z, nt::BigInt(static_cast<unsigned long>(d))) == d);
    }
  }
}

TEST_CASE("d-th roots") {
  CHECK(ff::dth_root(ff::prime_field(5).one(), 2).is_one());
  CHECK(ff::dth_root(ff::prime_field(7).from_int(4), 2) == ff::prime_field(7).from_int(2));
  CHECK(code_of([] { ff::dth_root(ff::prime_field(5).from_int(2), 2); }) == Errc::NoRoot);
  CHECK(code_of([] { ff::dth_root(ff::prime_field(5).zero(), 2); }) == Errc::ZeroElement);

  for (auto [p, m] : {std::pair{2ULL, 4U}, {3ULL, 2U}, {3ULL, 3U}, {5ULL, 2U}, {13ULL, 1U}}) {
    const Field f = ff::make_extension(p, m);
    const std::uint64_t N = f.group_order().get_ui();
    for (nt::BigInt i = 1; i < f.size(); ++i) {
      const auto a = f.element_at(i);
      for (std::uint64_t d = 1; d <= 12; ++d) {
        const bool exists = a.pow(N / std::gcd(d, N)).is_one();
        if (!exists) {
          CHECK(code_of([&] { ff::dth_root(a, d); }) == Errc::NoRoot);
          continue;
        }
        const auto b = ff::dth_root(a, d);
        CHECK(b.pow(d) == a);
        // Lex-smallest among all roots.
        for (nt::BigInt j = 1; j < f.size(); ++j) {
          const auto c = f.element_at(j);
          if (c.pow(d) == a) {
            CHECK(!(c < b));
            break;
          }
        }
      }
    }
  }

  const Field big = ff::make_extension(13, 6);
  const auto a = big.generator().pow(std::uint64_t{4 * 7});
  const auto b = ff::dth_root(a, 28);
  CHECK(b.pow(std::uint64_t{28}) == a);
}

TEST_CASE("embeddings") {
  const Field f3 = ff::prime_field(3), f9 = ff::make_extension(3, 2);
  const Field f2 = ff::prime_field(2), f4 = ff::make_extension(2, 2);
  CHECK(ff::embed(f3, f9).apply(f3.from_int(2)) == f9.from_int(2));
  CHECK(ff::embed(f2, f4).apply(f2.one()) == f4.one());
  CHECK(code_of([&] { ff::embed(f4, ff::make_extension(2, 3)); }) == Errc::NotASubfield);
  CHECK(code_of([&] { ff::embed(f4, f9); }) == Errc::NotASubfield);

  std::mt19937_64 rng(11);
  for (auto [p, a, b] : {std::tuple{2ULL, 2U, 4U}, {2ULL, 2U, 6U}, {3ULL, 2U, 4U}, {2ULL, 3U, 6U}, {5ULL, 1U, 3U},
                         {2ULL, 3U, 174U}}) {
    const Field sub = ff::make_extension(p, a), sup = ff::make_extension(p, b);
    const auto map = ff::embed(sub, sup);
    for (int i = 0; i < 100; ++i) {
      const auto x = random_elem(sub, rng), y = random_elem(sub, rng);
      CHECK(map.apply(x * y) == map.apply(x) * map.apply(y));
      CHECK(map.apply(x + y) == map.apply(x) + map.apply(y));
      CHECK(map.preimage(map.apply(x)) == x);
    }
    // Something outside the image has no preimage.
    CHECK_FALSE(map.preimage(sup.x()).has_value());
  }

  // Towers: the direct image of X is a Frobenius conjugate of the composite.
  const Field q = ff::make_extension(2, 2), mid = ff::make_extension(2, 4), top = ff::make_extension(2, 8);
  const auto direct = ff::embed(q, top).apply(q.x());
  const auto composite = ff::embed(mid, top).apply(ff::embed(q, mid).apply(q.x()));
  bool conjugate = false;
  for (unsigned j = 0; j < 2; ++j) conjugate = conjugate || composite.frobenius(j) == direct;
  CHECK(conjugate);
}

TEST_CASE("lazy caches are race free") {
  const Field f = ff::make_extension(3, 17);
  std::vector<FieldElem> gens(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { gens[t] = f.generator(); });
  for (auto& th : threads) th.join();
  for (const auto& g : gens) CHECK(g == gens[0]);
}

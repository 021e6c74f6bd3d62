#include <doctest.h>

#include <numeric>
#include <set>

#include "cyclofactor/error.hpp"
#include "cyclofactor/numtheory.hpp"

using namespace cyclofactor;
using nt::BigInt;

namespace {

std::uint64_t brute_ord(std::uint64_t m, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = m % n;
  for (std::uint64_t t = 1;; ++t) {
    if (x == 1) return t;
    x = x * m % n;
  }
}

unsigned big_valuation(BigInt v, std::uint64_t p) {
  unsigned k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("radical, valuation, totient, divisors") {
  CHECK(nt::radical(1) == 1);
  CHECK(nt::radical(12) == 6);
  CHECK(nt::radical(8) == 2);
  CHECK(nt::p_adic(8, 2) == 3);
  CHECK(nt::p_adic(12, 3) == 1);
  CHECK(nt::p_adic(7, 2) == 0);
  CHECK(code_of([] { nt::p_adic(8, 4); }) == Errc::NotPrime);
  CHECK(nt::euler_phi(1) == 1);
  CHECK(nt::euler_phi(8) == 4);
  CHECK(nt::divisors(8) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(nt::divisors(1) == std::vector<std::uint64_t>{1});

  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t i = 1; i <= n; ++i) phi += std::gcd(i, n) == 1;
    CHECK(nt::euler_phi(n) == phi);
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    CHECK(nt::divisors(n) == divs);
  }
}

TEST_CASE("primality and factorization") {
  std::vector<bool> sieve(5000, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i < sieve.size(); ++i)
    for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  for (std::uint64_t n = 0; n < sieve.size(); ++n) CHECK(nt::is_prime(n) == sieve[n]);

  for (std::uint64_t n : {1ULL, 2ULL, 360ULL, 1000003ULL * 1000033ULL, 18446744073709551557ULL, (1ULL << 61) - 1}) {
    const auto f = nt::factor(n);
    CHECK(f.value() == n);
    for (auto p : f.primes()) CHECK(nt::is_prime(p));
  }

  for (auto [base, exp] : {std::pair{2ULL, 174ULL}, {13ULL, 58ULL}, {3ULL, 40ULL}, {7ULL, 1ULL}}) {
    const auto f = nt::factor_power_minus_one(base, exp);
    CHECK(f.value() == nt::ipow(base, exp) - 1);
    for (const auto& [p, e] : f.factors) CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
  }
}

TEST_CASE("multiplicative order") {
  CHECK(nt::ord_mod(5, 1) == 1);
  CHECK(nt::ord_mod(3, 8) == 2);
  CHECK(nt::ord_mod(2, 5) == 4);
  CHECK(code_of([] { nt::ord_mod(2, 8); }) == Errc::NotCoprime);
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (std::uint64_t m = 1; m < 40; ++m)
      if (std::gcd(m, n) == 1) CHECK(nt::ord_mod(m, n) == brute_ord(m, n));
}

TEST_CASE("split by order") {
  auto s = nt::split_by_order(24, 3);
  CHECK(s.n1 == 3);
  CHECK(s.n2 == 8);
  s = nt::split_by_order(8, 1);
  CHECK(s.n1 == 1);
  CHECK(s.n2 == 8);
  s = nt::split_by_order(36, 6);
  CHECK(s.n1 == 36);
  CHECK(s.n2 == 1);
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (std::uint64_t e = 1; e <= 30; ++e) {
      s = nt::split_by_order(n, e);
      CHECK(s.n1 * s.n2 == n);
      CHECK(std::gcd(s.n2, e) == 1);
      CHECK(e % nt::radical(s.n1) == 0);
    }
}

TEST_CASE("cyclotomic cosets") {
  auto t = nt::coset_table(7, 1);
  CHECK(t.cosets == std::vector<std::vector<std::uint64_t>>{{0}});
  CHECK(t.reps == std::vector<std::uint64_t>{0});

  t = nt::coset_table(3, 8);
  CHECK(t.cosets == std::vector<std::vector<std::uint64_t>>{{0}, {1, 3}, {2, 6}, {4}, {5, 7}});
  CHECK(t.reps == std::vector<std::uint64_t>{0, 1, 2, 4, 5});

  t = nt::coset_table(2, 7);
  CHECK(t.cosets == std::vector<std::vector<std::uint64_t>>{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(t.reps == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(code_of([] { nt::coset_table(2, 8); }) == Errc::NotCoprime);

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 27})
    for (std::uint64_t d = 1; d <= 80; ++d) {
      if (std::gcd(q, d) != 1) continue;
      t = nt::coset_table(q, d);
      std::set<std::uint64_t> seen;
      for (std::size_t c = 0; c < t.cosets.size(); ++c) {
        const auto& cs = t.cosets[c];
        CHECK(cs.front() == t.reps[c]);
        CHECK(cs.size() == nt::ord_mod(q % (d / std::gcd(cs.front(), d)), d / std::gcd(cs.front(), d)));
        for (auto i : cs) {
          CHECK(seen.insert(i).second);
          CHECK(std::binary_search(cs.begin(), cs.end(), i * q % d));
          CHECK(t.coset_of(i) == c);
        }
      }
      CHECK(seen.size() == d);
    }
}

TEST_CASE("valuation of q^m - 1") {
  CHECK(nt::beyl_valuation(5, 2, 1) == 2);
  CHECK(nt::beyl_valuation(3, 2, 2) == 3);
  CHECK(nt::beyl_valuation(7, 3, 3) == 2);
  CHECK(code_of([] { nt::beyl_valuation(5, 3, 2); }) == Errc::PNotDividing);
  CHECK(code_of([] { nt::beyl_valuation(5, 4, 2); }) == Errc::NotPrime);
  for (std::uint64_t q = 2; q <= 13; ++q)
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (!nt::is_prime(p) || (q - 1) % p != 0) continue;
      for (std::uint64_t m = 1; m <= 12; ++m)
        CHECK(nt::beyl_valuation(q, p, m) == big_valuation(nt::ipow(q, m) - 1, p));
    }
}

TEST_CASE("gcd with q^t - 1") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 13})
    for (std::uint64_t n = 1; n <= 60; ++n)
      for (std::uint64_t t = 1; t <= 12; ++t) {
        const BigInt big = nt::ipow(q, t) - 1;
        BigInt g;
        mpz_gcd_ui(g.get_mpz_t(), big.get_mpz_t(), n);
        CHECK(nt::gcd_power_minus_one(n, q, t) == g.get_ui());
        for (std::uint64_t e = 1; e < q; ++e) {
          if ((q - 1) % e != 0) continue;
          const BigInt quot = big / e;
          mpz_gcd_ui(g.get_mpz_t(), quot.get_mpz_t(), n);
          CHECK(nt::gcd_power_minus_one_over(n, q, t, e) == g.get_ui());
        }
      }
}

TEST_CASE("gcd identities for coprime k and the q = 3 mod 4 case") {
  for (std::uint64_t q : {3, 5, 7, 9})
    for (std::uint64_t n = 1; n <= 40; ++n) {
      if ((q - 1) % nt::radical(n) != 0) continue;
      for (std::uint64_t k = 1; k <= 5; ++k) {
        if (std::gcd(n, k) != 1) continue;
        for (std::uint64_t m = 1; m <= 3; ++m)
          CHECK(nt::gcd_power_minus_one(n, q, k * m) == nt::gcd_power_minus_one(n, q, m));
      }
    }
  for (std::uint64_t q : {3, 7, 11})
    for (std::uint64_t n = 4; n <= 64; n += 4) {
      if ((q - 1) % nt::radical(n) != 0) continue;
      const unsigned l = std::min(nt::p_adic(n / 4, 2), nt::p_adic((q + 1) / 2, 2));
      CHECK(std::gcd(n, q * q - 1) == std::gcd(n, q - 1) * (2ULL << l));
    }
}

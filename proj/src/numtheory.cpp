#include "cyclofactor/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclofactor/error.hpp"

namespace cyclofactor::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = rho_u64(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

BigInt rho_big(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2, diff;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_big_rec(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    std::map<u64, unsigned> small;
    factor_rec(n.get_ui(), small);
    for (auto [p, e] : small) out[BigInt(static_cast<unsigned long>(p))] += e;
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  BigInt d = rho_big(n);
  factor_big_rec(d, out);
  factor_big_rec(BigInt(n / d), out);
}

}  // namespace

std::uint64_t IntFactorization::value() const {
  u64 v = 1;
  for (auto [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

std::vector<std::uint64_t> IntFactorization::primes() const {
  std::vector<u64> out;
  for (auto [p, e] : factors) out.push_back(p);
  return out;
}

BigInt BigFactorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

std::size_t CosetTable::coset_of(std::uint64_t i) const {
  i %= d;
  for (std::size_t c = 0; c < cosets.size(); ++c)
    if (std::binary_search(cosets[c].begin(), cosets[c].end(), i)) return c;
  fail(Errc::Internal, "coset lookup failed");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quotient = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - quotient * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - quotient * new_r};
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt b = static_cast<unsigned long>(base), out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || !mpz_fits_ulong_p(x.get_mpz_t()))
    fail(Errc::FieldTooLarge, "integer " + x.get_str() + " exceeds 64 bits");
  return x.get_ui();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (miller_rabin_witness(n, a, d, r)) return false;
  return true;
}

IntFactorization factor(std::uint64_t n) {
  IntFactorization out;
  if (n <= 1) return out;
  for (u64 p = 2; p * p <= n && p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out.factors[p];
      n /= p;
    }
  }
  factor_rec(n, out.factors);
  return out;
}

BigFactorization factor(const BigInt& n) {
  if (n < 1) fail(Errc::Internal, "factor of nonpositive integer");
  std::map<BigInt, unsigned> acc;
  BigInt rest = n;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (BigInt(static_cast<unsigned long>(p) * p) > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      ++acc[BigInt(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  factor_big_rec(rest, acc);
  BigFactorization out;
  for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
  return out;
}

BigFactorization factor_power_minus_one(std::uint64_t base, std::uint64_t exp) {
  std::map<BigInt, unsigned> acc;
  for (u64 d : divisors(exp)) {
    // Phi_d(base) = prod_{e | d} (base^e - 1)^mu(d/e)
    BigInt num = 1, den = 1;
    for (u64 e : divisors(d)) {
      int mu = 1;
      bool square = false;
      for (auto [pr, ex] : factor(d / e).factors) {
        if (ex > 1) square = true;
        mu = -mu;
      }
      if (square) continue;
      const BigInt term = ipow(base, e) - 1;
      if (mu == 1)
        num *= term;
      else
        den *= term;
    }
    const BigInt phi = num / den;
    for (auto& [pr, ex] : factor(phi).factors) acc[pr] += ex;
  }
  BigFactorization out;
  for (auto& [pr, ex] : acc) out.factors.emplace_back(pr, ex);
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  u64 r = 1;
  for (auto p : factor(n).primes()) r *= p;
  return r;
}

unsigned p_adic(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) fail(Errc::Internal, "valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t euler_phi(std::uint64_t n) {
  u64 phi = n;
  for (auto p : factor(n).primes()) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factor(n).factors) {
    const std::size_t size = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ord_mod(std::uint64_t m, std::uint64_t n) {
  if (n == 0) fail(Errc::Internal, "modulus zero");
  if (n == 1) return 1;
  m %= n;
  if (std::gcd(m, n) != 1)
    fail(Errc::NotCoprime, std::to_string(m) + " is not a unit mod " + std::to_string(n));
  u64 t = euler_phi(n);
  for (auto p : factor(t).primes()) {
    while (t % p == 0 && pow_mod(m, t / p, n) == 1) t /= p;
  }
  return t;
}

OrderSplit split_by_order(std::uint64_t n, std::uint64_t e) {
  OrderSplit out;
  for (auto [p, k] : factor(n).factors) {
    u64 pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    if (e % p == 0)
      out.n1 *= pk;
    else
      out.n2 *= pk;
  }
  return out;
}

CosetTable coset_table(std::uint64_t q, std::uint64_t d) {
  if (d == 0) fail(Errc::Internal, "coset modulus zero");
  if (std::gcd(q % d, d) != 1 && d != 1)
    fail(Errc::NotCoprime, "q and d must be coprime for cosets");
  CosetTable t;
  t.q = q;
  t.d = d;
  std::vector<bool> seen(d, false);
  const u64 qm = q % d;
  for (u64 i = 0; i < d; ++i) {
    if (seen[i]) continue;
    std::vector<u64> orbit;
    u64 x = i;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = mul_mod(x, qm, d);
    } while (x != i);
    std::sort(orbit.begin(), orbit.end());
    t.reps.push_back(i);
    t.cosets.push_back(std::move(orbit));
  }
  return t;
}

unsigned beyl_valuation(std::uint64_t q, std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (q < 2 || (q - 1) % p != 0)
    fail(Errc::PNotDividing, std::to_string(p) + " does not divide q - 1");
  if (m == 0) fail(Errc::Internal, "m must be positive");
  if (p != 2) return p_adic(q - 1, p) + p_adic(m, p);
  if (m % 2 == 1) return p_adic(q - 1, 2);
  return p_adic(q - 1, 2) + p_adic(m, 2) + p_adic(q + 1, 2) - 1;
}

std::uint64_t gcd_power_minus_one(std::uint64_t n, std::uint64_t q, std::uint64_t t) {
  if (n == 1) return 1;
  const u64 r = pow_mod(q, t, n);
  return std::gcd(n, (r + n - 1) % n);
}

std::uint64_t gcd_power_minus_one_over(std::uint64_t n, std::uint64_t q, std::uint64_t t,
                                       std::uint64_t e) {
  if (n == 1) return 1;
  BigInt modulus = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(e);
  BigInt qq = static_cast<unsigned long>(q), r;
  mpz_powm_ui(r.get_mpz_t(), qq.get_mpz_t(), t, modulus.get_mpz_t());
  r = r - 1;
  if (r < 0) r += modulus;
  if (mpz_divisible_ui_p(r.get_mpz_t(), e) == 0)
    fail(Errc::OrderNotDividing, "e does not divide q^t - 1");
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), e);
  return std::gcd(n, r.get_ui());
}

}  // namespace cyclofactor::nt

#pragma once

// Integer-side machinery: factorization, radicals, valuations, multiplicative
// orders and q-cyclotomic cosets.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cyclofactor::nt {

using BigInt = mpz_class;

struct IntFactorization {
  std::map<std::uint64_t, unsigned> factors;  // prime -> exponent

  std::uint64_t value() const;
  std::vector<std::uint64_t> primes() const;
};

struct BigFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes

  BigInt value() const;
};

struct OrderSplit {
  std::uint64_t n1 = 1;  // primes shared with e
  std::uint64_t n2 = 1;  // coprime to e
};

/// Partition of {0, ..., d-1} into orbits of i -> i*q mod d.
struct CosetTable {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::vector<std::vector<std::uint64_t>> cosets;  // each sorted, ordered by smallest member
  std::vector<std::uint64_t> reps;                 // smallest member of each coset

  /// Index into `cosets` of the coset containing i.
  std::size_t coset_of(std::uint64_t i) const;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// base^exp as an arbitrary-precision integer.
BigInt ipow(std::uint64_t base, std::uint64_t exp);
/// Narrowing with a range check (FieldTooLarge on overflow).
std::uint64_t to_u64(const BigInt& x);

bool is_prime(std::uint64_t n);
IntFactorization factor(std::uint64_t n);
/// Trial division to 10^6, then Brent-Pollard rho on the cofactors.
BigFactorization factor(const BigInt& n);

/// base^exp - 1 via its cyclotomic factors Phi_d(base), d | exp.
BigFactorization factor_power_minus_one(std::uint64_t base, std::uint64_t exp);

std::uint64_t radical(std::uint64_t n);
unsigned p_adic(std::uint64_t n, std::uint64_t p);
/// Least t >= 1 with m^t = 1 (mod n).
std::uint64_t ord_mod(std::uint64_t m, std::uint64_t n);
OrderSplit split_by_order(std::uint64_t n, std::uint64_t e);
CosetTable coset_table(std::uint64_t q, std::uint64_t d);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// nu_p(q^m - 1) for a prime p dividing q - 1, by the closed case split.
unsigned beyl_valuation(std::uint64_t q, std::uint64_t p, std::uint64_t m);

/// gcd(n, q^t - 1) without forming q^t.
std::uint64_t gcd_power_minus_one(std::uint64_t n, std::uint64_t q, std::uint64_t t);
/// gcd(n, (q^t - 1)/e) for e dividing q - 1.
std::uint64_t gcd_power_minus_one_over(std::uint64_t n, std::uint64_t q, std::uint64_t t,
                                       std::uint64_t e);

}  // namespace cyclofactor::nt

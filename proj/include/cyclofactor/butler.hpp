#pragma once

// Census of the irreducible factors of f(X^n) by degree and order.

#include <cstdint>
#include <tuple>
#include <vector>

#include "cyclofactor/factorization.hpp"

namespace cyclofactor::factor {

struct ButlerEntry {
  std::uint64_t d = 1;  // divisor of n2
  std::uint64_t count = 0;
  std::uint64_t degree = 0;
  std::uint64_t order = 0;

  friend bool operator==(const ButlerEntry&, const ButlerEntry&) = default;
};

/// One entry per divisor d of n2 (ascending), where n = n1 n2, every prime of
/// n1 divides e = ord(f) and gcd(n2, e) = 1.
std::vector<ButlerEntry> butler_profile(const poly::Poly& f, std::uint64_t n);

/// Sorted (degree, count, order) triples.
using Histogram = std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>;

Histogram histogram(const std::vector<ButlerEntry>& profile);
/// Factors grouped by (degree, order of the polynomial), multiplicities ignored.
Histogram histogram(const Factorization& fz);

}  // namespace cyclofactor::factor

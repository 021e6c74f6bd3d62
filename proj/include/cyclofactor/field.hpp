#pragma once

// Finite fields F_{p^m} in a polynomial basis over F_p. Contexts are interned
// in a process-wide registry and never freed, so a Field is a cheap handle and
// elements compare contexts by pointer.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cyclofactor/numtheory.hpp"

namespace cyclofactor::ff {

using Coords = boost::container::small_vector<std::uint64_t, 4>;

class FieldElem;

struct FieldCtx {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::vector<std::uint64_t> modulus;  // low -> high, size m + 1, monic
  nt::BigInt size;                     // p^m
  nt::BigInt group_order;              // p^m - 1

  mutable std::once_flag factors_once;
  mutable nt::BigFactorization group_factors;
  mutable std::once_flag generator_once;
  mutable Coords generator;
  mutable std::mutex cache_mutex;
  mutable std::map<nt::BigInt, Coords> unity_roots;
  mutable std::map<std::uint64_t, Coords> sylow_gens;
};

class Field {
 public:
  Field() = default;
  explicit Field(const FieldCtx* ctx) : ctx_(ctx) {}

  bool valid() const { return ctx_ != nullptr; }
  const FieldCtx& ctx() const { return *ctx_; }
  std::uint64_t p() const { return ctx_->p; }
  unsigned m() const { return ctx_->m; }
  const std::vector<std::uint64_t>& modulus() const { return ctx_->modulus; }
  const nt::BigInt& size() const { return ctx_->size; }
  const nt::BigInt& group_order() const { return ctx_->group_order; }
  bool is_prime_field() const { return ctx_->m == 1; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coords(Coords c) const;
  /// The residue class of X (a root of the modulus).
  FieldElem x() const;
  /// The element whose coordinates are the base-p digits of index, with
  /// c_0 least significant; ascending index is coordinate-lex order.
  FieldElem element_at(const nt::BigInt& index) const;
  /// Reduce a low -> high vector of residues mod p (length up to 2m - 1)
  /// modulo the field modulus.
  FieldElem reduce(std::vector<std::uint64_t> wide) const;

  /// Prime factorization of p^m - 1, computed once via the cyclotomic split.
  const nt::BigFactorization& group_order_factors() const;
  /// Lex-smallest element of order p^m - 1.
  FieldElem generator() const;

  /// "p^m/c_m,...,c_0"
  std::string spec() const;

  friend bool operator==(Field a, Field b) { return a.ctx_ == b.ctx_; }

 private:
  const FieldCtx* ctx_ = nullptr;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, Coords c) : field_(f), c_(std::move(c)) {}

  Field field() const { return field_; }
  const Coords& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  /// Integer value for elements of the prime subfield.
  std::optional<std::uint64_t> as_prime() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

  FieldElem inv() const;
  FieldElem pow(const nt::BigInt& e) const;
  FieldElem pow(std::uint64_t e) const;
  /// x^(p^k)
  FieldElem frobenius(unsigned k) const;

  /// "[c_{m-1},...,c_0]", or the bare integer in a prime field.
  std::string to_string() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  /// Coordinate-lex order: c_{m-1} most significant.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

 private:
  Field field_;
  Coords c_;
};

/// Lex-smallest monic irreducible of degree m when modulus is omitted.
/// Explicit moduli are given low -> high and must be monic of degree m.
Field make_extension(std::uint64_t p, unsigned m,
                     const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt);
Field prime_field(std::uint64_t p);

/// Rabin/Ben-Or irreducibility over F_p for a low -> high coefficient vector.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

/// Least t with x^t = 1. With a multiple of the order supplied, only that
/// integer is factored; otherwise the factorization of p^m - 1 is used.
nt::BigInt element_order(const FieldElem& x, const std::optional<nt::BigInt>& multiple = std::nullopt);

/// x^(N/d) for the lex-smallest x making this of exact order d (N = p^m - 1).
FieldElem primitive_root_of_unity(Field f, const nt::BigInt& d);
FieldElem primitive_root_of_unity(Field f, std::uint64_t d);

/// A d-th root of a, canonicalized to the lex-smallest root when at most
/// 65536 roots exist.
FieldElem dth_root(const FieldElem& a, std::uint64_t d);

}  // namespace cyclofactor::ff

#pragma once

// Dense univariate polynomials over a finite field.

#include <optional>
#include <string>
#include <vector>

#include "cyclofactor/field.hpp"

namespace cyclofactor::poly {

using ff::Field;
using ff::FieldElem;

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldElem& c);
  static Poly monomial(const FieldElem& c, std::size_t k);
  /// X
  static Poly x(Field f);
  /// X - c
  static Poly linear(const FieldElem& c);
  /// X^n - a
  static Poly binomial(std::size_t n, const FieldElem& a);
  static Poly from_ints(Field f, const std::vector<std::int64_t>& low_to_high);

  Field field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FieldElem coeff(std::size_t i) const;
  FieldElem lead() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElem& s);
  friend bool operator==(const Poly& a, const Poly& b);

  FieldElem eval(const FieldElem& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// f(X^k)
  Poly substitute_power(std::size_t k) const;
  /// Apply x -> x^(p^k) to every coefficient.
  Poly map_frobenius(unsigned k) const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElem> c_;  // index = exponent
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, std::uint64_t e);
Poly pow_mod(const Poly& a, const nt::BigInt& e, const Poly& mod);
Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& mod);
/// X^(p^k) mod `mod`, by k repeated p-th powers.
Poly frobenius_x_mod(const Poly& mod, unsigned k);

/// All distinct roots of f in its own field, ascending in coordinate-lex order.
std::vector<FieldElem> find_roots(const Poly& f);
/// Lex-smallest root, if any.
std::optional<FieldElem> smallest_root(const Poly& f);

/// h^{deg f} * f(g/h).
Poly q_transform(const Poly& f, const Poly& g, const Poly& h);

/// Lex order on coefficient vectors, top coefficient most significant.
bool coeff_lex_less(const Poly& a, const Poly& b);

/// Text form "x^2 + [1,0]*x + 1"; the parser also accepts '-' and implicit '*'.
std::string to_string(const Poly& f);
Poly parse_poly(Field f, const std::string& text);
FieldElem parse_element(Field f, const std::string& text);
/// "p", "p^m" or "p^m/c_m,...,c_0".
Field parse_field(const std::string& spec);

}  // namespace cyclofactor::poly

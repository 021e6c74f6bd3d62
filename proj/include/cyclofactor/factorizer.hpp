#pragma once

#include <cstdint>
#include <optional>

#include "cyclofactor/engine.hpp"
#include "cyclofactor/factorization.hpp"

namespace cyclofactor::factor {

/// X^t - a is irreducible over the field of a.
bool serret_irreducible(const ff::FieldElem& a, std::uint64_t t);

/// Given X^t - a irreducible, p prime with p | q - 1 and (4 does not divide
/// t p or q = 1 mod 4): is X^{tp} - a irreducible?
bool step_irreducible_tp(const ff::FieldElem& a, std::uint64_t t, std::uint64_t p);

/// Direct product formula when rad(n) | q - 1 and (4 does not divide n or
/// q = 1 mod 4). Works entirely inside F_q.
Factorization factor_radq1(const ff::FieldElem& a, std::uint64_t n);

/// X^n - a for any n >= 1 and a != 0.
Factorization factor_binomial(const ff::FieldElem& a, std::uint64_t n, const EngineOptions& opt = {});

/// X^n - 1.
Factorization factor_unity(ff::Field fq, std::uint64_t n, const EngineOptions& opt = {});

/// The n-th cyclotomic polynomial, gcd(n, q) = 1.
Factorization factor_cyclotomic(ff::Field fq, std::uint64_t n, const EngineOptions& opt = {});

/// f(X^n) for f irreducible over F_q.
Factorization factor_composition(const poly::Poly& f, std::uint64_t n, const EngineOptions& opt = {});

/// X^n - a obtained by rescaling the factors of X^n - 1, when a has an n-th
/// root in F_q.
std::optional<Factorization> unity_shortcut(const ff::FieldElem& a, std::uint64_t n);

}  // namespace cyclofactor::factor

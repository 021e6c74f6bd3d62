#pragma once

// Subfield-aware operations on polynomials: coefficient Frobenius, coefficient
// degree, q-spins and polynomial orders.

#include <optional>

#include "cyclofactor/embedding.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor::poly {

/// Raise every coefficient of h to the power q^j, where q = |base|.
Poly coeff_frobenius(const Poly& h, std::uint64_t j, Field base);

/// Least j >= 1 with coeff_frobenius(h, j) = h.
std::uint64_t coeff_degree(const Poly& h, Field base);

/// Map a polynomial over `base` into a larger field.
Poly lift(const Poly& h, Field sup);
/// Rewrite a polynomial whose coefficients lie in `base` over `base`.
std::optional<Poly> descend(const Poly& h, Field base);

/// prod_{j < coeff_degree} h^(j), still over h's field.
Poly spin_product(const Poly& h, Field base);
/// The q-spin of h re-expressed over `base`.
Poly q_spin(const Poly& h, Field base);
/// The q-spin of X - gamma over `base`: the minimal polynomial of gamma.
Poly minimal_polynomial(const FieldElem& gamma, Field base);

/// ord(f) for f irreducible with f(0) != 0: the least e with f | X^e - 1.
/// A known multiple of the order keeps the integer factorization small.
nt::BigInt poly_order(const Poly& f, const std::optional<nt::BigInt>& multiple = std::nullopt);

}  // namespace cyclofactor::poly

#include <numeric>

#include "cyclofactor/error.hpp"
#include "cyclofactor/factorizer.hpp"

namespace cyclofactor::factor {

bool serret_irreducible(const ff::FieldElem& a, std::uint64_t t) {
  if (a.is_zero()) fail(Errc::ZeroElement, "serret_irreducible needs a != 0");
  if (t == 0) fail(Errc::PreconditionViolated, "t must be positive");
  if (t == 1) return true;
  const std::uint64_t q = nt::to_u64(a.field().size());
  const std::uint64_t ord = nt::to_u64(ff::element_order(a));
  if (ord % nt::radical(t) != 0) return false;
  if (std::gcd(t, (q - 1) / ord) != 1) return false;
  return t % 4 != 0 || q % 4 == 1;
}

bool step_irreducible_tp(const ff::FieldElem& a, std::uint64_t t, std::uint64_t p) {
  if (a.is_zero()) fail(Errc::ZeroElement, "step_irreducible_tp needs a != 0");
  if (!nt::is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  const std::uint64_t q = nt::to_u64(a.field().size());
  if ((q - 1) % p != 0) fail(Errc::PNotDividing, std::to_string(p) + " does not divide q - 1");
  if ((t * p) % 4 == 0 && q % 4 != 1)
    fail(Errc::PreconditionViolated, "4 divides tp while q = 3 mod 4");
  if (!serret_irreducible(a, t))
    fail(Errc::PreconditionViolated, "X^" + std::to_string(t) + " - a is not irreducible");
  if (t % p == 0) return true;
  const std::uint64_t ord = nt::to_u64(ff::element_order(a));
  return (q - 1) % (p * ord) != 0;
}

}  // namespace cyclofactor::factor

#include "cyclofactor/error.hpp"

namespace cyclofactor {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::OrderNotDividing: return "OrderNotDividing";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::PNotDividing: return "PNotDividing";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::DivByZero: return "DivByZero";
    case Errc::BaseNotSubfield: return "BaseNotSubfield";
    case Errc::ImproperCoefficients: return "ImproperCoefficients";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::RootAtZero: return "RootAtZero";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::RadicalNotDividing: return "RadicalNotDividing";
    case Errc::FourDividesConflict: return "FourDividesConflict";
    case Errc::NotCoprimeToChar: return "NotCoprimeToChar";
    case Errc::DegreeGuard: return "DegreeGuard";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FactorizationFailed: return "FactorizationFailed";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

MathError::MathError(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw MathError(code, what); }

}  // namespace cyclofactor

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclofactor {

/// Error categories raised by the library. Every mathematical failure is a
/// MathError carrying one of these codes; malformed text input is a ParseError.
enum class Errc {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  ZeroElement,
  OrderNotDividing,
  NoRoot,
  NotASubfield,
  NotCoprime,
  PNotDividing,
  CtxMismatch,
  DivByZero,
  BaseNotSubfield,
  ImproperCoefficients,
  NotIrreducible,
  RootAtZero,
  PreconditionViolated,
  RadicalNotDividing,
  FourDividesConflict,
  NotCoprimeToChar,
  DegreeGuard,
  FieldTooLarge,
  FactorizationFailed,
  Internal,
};

std::string_view to_string(Errc code);

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace cyclofactor

#pragma once

#include <functional>

#include "cyclofactor/error.hpp"

namespace testing {

/// Code of the MathError thrown by fn; Internal if nothing is thrown.
inline cyclofactor::Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const cyclofactor::MathError& e) {
    return e.code();
  }
  return cyclofactor::Errc::Internal;
}

}  // namespace testing

#pragma once

#include <string>
#include <vector>

#include "cyclofactor/factorization.hpp"
#include "cyclofactor/oracle.hpp"

namespace cyclofactor {

struct VerifyReport {
  bool product_ok = true;
  bool irreducible_ok = true;
  bool degree_ok = true;
  bool order_ok = true;
  bool butler_checked = false;
  bool butler_ok = true;
  bool oracle_checked = false;
  bool oracle_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Self-consistency of a factorization: reconstruction, irreducibility,
/// declared degrees and orders, and the degree/count/order census where it applies.
VerifyReport verify(const Factorization& fz, const oracle::OracleConfig& cfg = {});

/// verify() plus equality of the factor multiset with the brute-force oracle.
VerifyReport verify_against_oracle(const Factorization& fz, const oracle::OracleConfig& cfg = {});

}  // namespace cyclofactor

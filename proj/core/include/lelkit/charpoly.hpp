#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lelkit/graph.hpp"

namespace lelkit {

using BigInt = boost::multiprecision::cpp_int;

/// Characteristic coefficients c_0..c_n of an order-n matrix M under
///   det(tI - M) = sum_k (-1)^k c_k t^(n-k).
/// For a Laplacian every c_k is non-negative.
struct ExactCoeffs {
  std::size_t n = 0;
  std::vector<BigInt> c;

  friend bool operator==(const ExactCoeffs&, const ExactCoeffs&) = default;
};

/// Exact coefficients by Berkowitz' division-free recursion. Accepts any
/// square integer matrix; no rounding takes place.
ExactCoeffs characteristic_coefficients(const IntegerMatrix& m);

/// Laplacian shortcut: characteristic_coefficients(laplacian_matrix(g)).
ExactCoeffs laplacian_coefficients(const Graph& g);

std::vector<std::string> to_decimal_strings(const ExactCoeffs& coeffs);

struct IdentityCheck {
  std::string name;  // e.g. "c1=2m"
  BigInt expected;
  BigInt actual;
  bool pass = false;
};

struct CoefficientIdentityReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> checks;

  bool pass() const noexcept;
};

/// Exact checks c0=1, c1=2(n-1), c_{n-1}=n, c_n=0 and c_{n-2}=W(t).
/// The Wiener check is omitted for n < 2. Throws NotATree.
CoefficientIdentityReport verify_coefficient_identities(const Graph& t);

/// Same checks against coefficients the caller already holds.
CoefficientIdentityReport verify_coefficient_identities(const Graph& t, const ExactCoeffs& coeffs);

}  // namespace lelkit

#include "lelkit/charpoly.hpp"

#include <algorithm>

#include "lelkit/error.hpp"

namespace lelkit {

// Berkowitz: with A_r the leading r x r block split as [[A_{r-1}, C], [R, a]],
//   p_r = T_r * p_{r-1},  T_r = (1, -a, -R C, -R A_{r-1} C, ..., -R A_{r-1}^{r-2} C)
// where T_r acts as a lower-triangular Toeplitz matrix. p_r holds det(tI - A_r)
// in descending powers of t.
ExactCoeffs characteristic_coefficients(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> poly{1};
  std::vector<BigInt> toeplitz;
  std::vector<BigInt> v;
  std::vector<BigInt> next;

  for (std::size_t r = 0; r < n; ++r) {
    // Block of order r is rows/cols [0, r); new row/col index r.
    toeplitz.assign(r + 2, BigInt(0));
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);

    v.assign(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);

    for (std::size_t k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const auto w = m(r, i);
        if (w != 0 && !v[i].is_zero()) dot += v[i] * w;
      }
      toeplitz[k] = -dot;
      if (k == r + 1) break;
      next.assign(r, BigInt(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          const auto w = m(i, j);
          if (w != 0 && !v[j].is_zero()) next[i] += v[j] * w;
        }
      }
      v.swap(next);
    }

    std::vector<BigInt> grown(r + 2, BigInt(0));
    for (std::size_t i = 0; i < grown.size(); ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!toeplitz[i - j].is_zero()) grown[i] += toeplitz[i - j] * poly[j];
      }
    }
    poly.swap(grown);
  }

  ExactCoeffs out;
  out.n = n;
  out.c.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.c[k] = (k % 2 == 0) ? poly[k] : BigInt(-poly[k]);
  return out;
}

ExactCoeffs laplacian_coefficients(const Graph& g) {
  return characteristic_coefficients(laplacian_matrix(g));
}

std::vector<std::string> to_decimal_strings(const ExactCoeffs& coeffs) {
  std::vector<std::string> out;
  out.reserve(coeffs.c.size());
  for (const auto& c : coeffs.c) out.push_back(c.str());
  return out;
}

bool CoefficientIdentityReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

CoefficientIdentityReport verify_coefficient_identities(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "coefficient identities need a tree");
  return verify_coefficient_identities(t, laplacian_coefficients(t));
}

CoefficientIdentityReport verify_coefficient_identities(const Graph& t, const ExactCoeffs& coeffs) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "coefficient identities need a tree");
  const std::size_t n = t.order();
  if (coeffs.n != n || coeffs.c.size() != n + 1) {
    throw Error(ErrorCode::OrderMismatch, "coefficient vector does not match tree order");
  }

  CoefficientIdentityReport report;
  report.n = n;
  auto add = [&](std::string name, BigInt expected, const BigInt& actual) {
    const bool ok = expected == actual;
    report.checks.push_back({std::move(name), std::move(expected), actual, ok});
  };
  add("c0=1", 1, coeffs.c[0]);
  add("c1=2m", BigInt(2 * t.size()), coeffs.c[1]);
  add("c(n-1)=n*tau", BigInt(n), coeffs.c[n - 1]);  // tau = 1 for a tree
  add("cn=0", 0, coeffs.c[n]);
  if (n >= 2) add("c(n-2)=W", BigInt(wiener_index(t)), coeffs.c[n - 2]);
  return report;
}

}  // namespace lelkit

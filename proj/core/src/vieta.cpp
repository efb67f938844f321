#include "lelkit/vieta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lelkit/error.hpp"

namespace lelkit {

namespace {

double ipow(double base, std::size_t exp) {
  double out = 1.0;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

PreparedRoots PreparedRoots::make(std::vector<double> roots, std::optional<double> gap_floor) {
  if (roots.empty()) throw Error(ErrorCode::InvalidOrder, "PreparedRoots needs at least one root");
  std::sort(roots.begin(), roots.end(), std::greater<>());
  for (double v : roots) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::NonPositiveRoot, "root " + std::to_string(v) + " is not positive");
    }
  }

  PreparedRoots r;
  r.gap_floor_ = gap_floor.value_or(kDefaultGapFloorRel * roots.front());
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    r.min_gap_ = std::min(r.min_gap_, roots[i] - roots[i + 1]);
  }
  if (r.min_gap_ < r.gap_floor_) {
    throw Error(ErrorCode::RepeatedRoots, "roots closer than the gap floor (" +
                                              std::to_string(r.min_gap_) + " < " +
                                              std::to_string(r.gap_floor_) + ")");
  }

  r.x_ = std::move(roots);
  r.omega_prime_.assign(r.x_.size(), 1.0);
  for (std::size_t i = 0; i < r.x_.size(); ++i) {
    for (std::size_t k = 0; k < r.x_.size(); ++k) {
      if (k != i) r.omega_prime_[i] *= r.x_[i] - r.x_[k];
    }
  }
  return r;
}

double PreparedRoots::min_abs_omega_prime() const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (double w : omega_prime_) best = std::min(best, std::abs(w));
  return best;
}

RealCoeffs elementary_symmetric(std::span<const double> values) {
  // Expand prod (t + x_i) one root at a time; e[k] = sigma_k of the roots seen so far.
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += values[i] * e[k - 1];
  }
  return RealCoeffs{std::vector<double>(e.begin() + 1, e.end())};
}

RealCoeffs elementary_symmetric(const PreparedRoots& r) { return elementary_symmetric(r.x()); }

JacobianMatrix multiply(const JacobianMatrix& a, const JacobianMatrix& b) {
  if (a.n != b.n) throw Error(ErrorCode::OrderMismatch, "Jacobian orders differ");
  JacobianMatrix out{a.n, a.orientation, std::vector<WideReal>(a.n * a.n, WideReal(0))};
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      const WideReal& aik = a(i, k);
      for (std::size_t j = 0; j < a.n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_deviation_from_identity(const JacobianMatrix& m) {
  WideReal worst = 0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      WideReal d = m(i, j) - (i == j ? 1 : 0);
      worst = std::max(worst, WideReal(abs(d)));
    }
  }
  return static_cast<double>(worst);
}

JacobianMatrix forward_jacobian(const PreparedRoots& r) {
  const std::size_t n = r.size();
  std::vector<WideReal> c(n + 1, WideReal(0));
  c[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) c[k] += r.x(i) * c[k - 1];
  }
  JacobianMatrix jac{n, JacobianOrientation::Forward, std::vector<WideReal>(n * n, WideReal(0))};
  for (std::size_t j = 0; j < n; ++j) jac(0, j) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    // row i holds d c_{i+1} / d x_j
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = c[i] - r.x(j) * jac(i - 1, j);
  }
  return jac;
}

JacobianMatrix inverse_jacobian_closed_form(const PreparedRoots& r) {
  const std::size_t n = r.size();
  JacobianMatrix jac{n, JacobianOrientation::Inverse, std::vector<WideReal>(n * n, WideReal(0))};
  for (std::size_t i = 0; i < n; ++i) {
    const WideReal xi = r.x(i);
    WideReal omega_prime = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) omega_prime *= xi - r.x(k);
    }
    WideReal power = 1;  // xi^(n-1-j), filled from the last column
    for (std::size_t j = n; j-- > 0;) {
      // 1-based column j+1: sign (-1)^j, power n-(j+1)
      jac(i, j) = ((j % 2 == 0) ? power : WideReal(-power)) / omega_prime;
      power *= xi;
    }
  }
  return jac;
}

double weighted_power_sum(const PreparedRoots& r, std::size_t m) {
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) total += ipow(r.x(i), m) / r.omega_prime(i);
  return total;
}

double weighted_sum_scale(const PreparedRoots& r, std::size_t m) {
  return std::max(1.0, ipow(r.x(0), m) / r.min_abs_omega_prime());
}

double weighted_sum_recurrence_residual(const PreparedRoots& r, std::size_t k) {
  const std::size_t n = r.size();
  if (k < 1 || k > n + 1) {
    throw Error(ErrorCode::InvalidOrder, "recurrence index k must lie in [1, n+1]");
  }
  const RealCoeffs c = elementary_symmetric(r);
  double total = 0.0;
  for (std::size_t t = 0; t <= k; ++t) {
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    total += sign * c.at(k - t) * weighted_power_sum(r, n - 1 + t);
  }
  return total;
}

double newton_identity_residual(const PreparedRoots& r, std::size_t k) {
  const std::size_t n = r.size();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidOrder, "Newton index k must lie in [1, n]");
  const RealCoeffs c = elementary_symmetric(r);
  double rhs = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    double p = 0.0;
    for (double x : r.x()) p += ipow(x, i);
    const double sign = (i % 2 == 1) ? 1.0 : -1.0;
    rhs += sign * c.at(k - i) * p;
  }
  return static_cast<double>(k) * c.at(k) - rhs;
}

namespace {

// sum_i f(x_i) / omega'(x_i) with omega' rebuilt and the sum accumulated in long double.
template <typename F>
long double divided_difference_extended(F&& f, const PreparedRoots& r) {
  long double total = 0.0L;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const long double xi = r.x(i);
    const long double fx = f(xi);
    if (!std::isfinite(fx)) {
      throw Error(ErrorCode::NonFiniteFunctionValue, "f is not finite at x = " + std::to_string(r.x(i)));
    }
    long double omega_prime = 1.0L;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k != i) omega_prime *= xi - static_cast<long double>(r.x(k));
    }
    total += fx / omega_prime;
  }
  return total;
}

}  // namespace

DividedDifference divided_difference(const std::function<double(double)>& f, const PreparedRoots& r,
                                     const DerivativeSign& sign) {
  DividedDifference out;
  out.value = static_cast<double>(
      divided_difference_extended([&f](long double x) -> long double { return f(static_cast<double>(x)); }, r));
  if (sign) {
    const int expected = sign(r.size() - 1, r.x(r.size() - 1), r.x(0));
    if (expected != 0) out.sign_matches = (expected > 0) ? out.value > 0.0 : out.value < 0.0;
  }
  return out;
}

std::vector<double> lel_gradient_wrt_coeffs(const PreparedRoots& mu) {
  const std::size_t count = mu.size();
  if (mu.x(count - 1) <= mu.gap_floor()) {
    throw Error(ErrorCode::ZeroEigenvalueIncluded,
                "eigenvalue " + std::to_string(mu.x(count - 1)) + " is at or below the gap floor");
  }

  std::vector<double> grad(count);
  for (std::size_t k = 1; k <= count; ++k) {
    // f(x) = x^(N-k-1/2); its derivative of order N-1 has the sign of
    // prod_{j=0}^{N-2} (N-k-1/2-j), i.e. (-1)^(k-1), matching the factor below.
    const std::size_t power = count - k;
    auto f = [power](long double x) {
      long double p = 1.0L;
      for (std::size_t j = 0; j < power; ++j) p *= x;
      return p / std::sqrt(x);
    };
    const long double dd = divided_difference_extended(f, mu);
    const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
    grad[k - 1] = static_cast<double>(0.5L * sign * dd);
  }
  return grad;
}

double lel_of_roots(const PreparedRoots& mu) {
  double total = 0.0;
  for (double x : mu.x()) total += std::sqrt(x);
  return total;
}

}  // namespace lelkit

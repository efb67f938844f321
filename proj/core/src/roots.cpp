#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <numbers>
#include <string>
#include <vector>

#include "lelkit/error.hpp"
#include "lelkit/vieta.hpp"

namespace lelkit {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

constexpr int kMaxAberthIterations = 500;
constexpr int kPolishIterations = 4;
constexpr Real kImagTolerance = 1e-7L;
constexpr double kResidualTolerance = 1e-12;
constexpr double kRoundTripTolerance = 1e-9;

// Monic coefficients a_0 = 1, a_k = (-1)^k c_k for t^(n-k).
std::vector<Real> monic(std::span<const Real> c) {
  std::vector<Real> a(c.size() + 1);
  a[0] = 1.0L;
  for (std::size_t k = 1; k <= c.size(); ++k) a[k] = ((k % 2 == 0) ? 1.0L : -1.0L) * c[k - 1];
  return a;
}

template <typename T>
void horner(const std::vector<Real>& a, T x, T& p, T& dp) {
  p = T(a[0]);
  dp = T(0);
  for (std::size_t k = 1; k < a.size(); ++k) {
    dp = dp * x + p;
    p = p * x + T(a[k]);
  }
}

// Scale for the residual test: sum |a_k| |x|^(n-k).
Real evaluation_scale(const std::vector<Real>& a, Real x) {
  Real s = 0.0L;
  const Real ax = std::abs(x);
  for (const Real ak : a) s = s * ax + std::abs(ak);
  return s;
}


std::vector<long double> cold_roots(std::span<const long double> c) {
  const std::size_t n = c.size();
  const std::vector<Real> a = monic(c);

  // Bound on root moduli (Fujiwara-style, simplified to 2 max |a_k|^(1/k)).
  Real bound = 0.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    bound = std::max(bound, std::pow(std::abs(a[k]), 1.0L / static_cast<Real>(k)));
  }
  bound *= 2.0L;

  std::vector<Complex> z(n);
  const Real center = c[0] / static_cast<Real>(n);
  const Real radius = std::max(bound, 1.0L);
  for (std::size_t i = 0; i < n; ++i) {
    const Real angle = 2.0L * std::numbers::pi_v<Real> * static_cast<Real>(i) / static_cast<Real>(n) + 0.4L;
    z[i] = center + std::polar(radius, angle);
  }

  // A root is frozen once its step is negligible or its residual is at the
  // rounding level of the evaluation.
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  const Real step_tol = 64.0L * eps * std::max(bound, 1.0L);
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int iter = 0; iter < kMaxAberthIterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex p;
      Complex dp;
      horner(a, z[i], p, dp);
      if (std::abs(p) <= 8.0L * eps * evaluation_scale(a, std::abs(z[i]))) {
        done[i] = true;
        --remaining;
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion(0.0L);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0L - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= step_tol) {
        done[i] = true;
        --remaining;
      }
    }
  }

  std::vector<Real> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real scale = std::max<Real>(1.0L, std::abs(z[i]));
    if (!std::isfinite(z[i].real()) || std::abs(z[i].imag()) > kImagTolerance * scale) {
      throw Error(ErrorCode::NoRealSimpleRoots, "iteration settled on a non-real root");
    }
    Real x = z[i].real();
    for (int k = 0; k < kPolishIterations; ++k) {
      Real p;
      Real dp;
      horner(a, x, p, dp);
      if (dp == 0.0L) break;
      x -= p / dp;
    }
    roots[i] = x;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

std::vector<long double> root_shifts(std::span<const long double> c, const PreparedRoots& base) {
  const std::size_t n = base.size();
  if (c.size() != n) throw Error(ErrorCode::OrderMismatch, "coefficient count differs from base root count");

  std::vector<Real> g(base.x().begin(), base.x().end());
  std::vector<Real> sigma(n + 1, 0.0L);
  sigma[0] = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) sigma[k] += g[i] * sigma[k - 1];
  }
  // R(t) = sum_{k>=1} (-1)^k (c_k - sigma_k) t^(n-k), degree n-1, leading term first.
  std::vector<Real> r(n);
  for (std::size_t k = 1; k <= n; ++k) {
    r[k - 1] = ((k % 2 == 0) ? 1.0L : -1.0L) * (c[k - 1] - sigma[k]);
  }
  Real r_scale = 0.0L;
  for (Real v : r) r_scale = std::max(r_scale, std::abs(v));

  // P(g_i + d) and P'(g_i + d) from the product form plus R.
  auto evaluate = [&](std::size_t i, Complex d, Complex& p, Complex& dp) {
    Complex prod(1.0L);
    Complex dprod(0.0L);  // derivative of prod_{j != i} (g_i - g_j + d)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex f = (g[i] - g[j]) + d;
      dprod = dprod * f + prod;
      prod *= f;
    }
    const Complex t = g[i] + d;
    Complex rv(0.0L);
    Complex drv(0.0L);
    for (Real coef : r) {
      drv = drv * t + rv;
      rv = rv * t + coef;
    }
    p = d * prod + rv;
    dp = prod + d * dprod + drv;
  };

  std::vector<Complex> d(n, Complex(0.0L));
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  const Real step_tol = 64.0L * eps;
  const Real shift_floor = eps * std::max<Real>(1.0L, g[0]);
  bool converged = r_scale == 0.0L;
  for (int iter = 0; iter < kMaxAberthIterations && !converged; ++iter) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      Complex p;
      Complex dp;
      evaluate(i, d[i], p, dp);
      if (p == Complex(0.0L)) continue;
      const Complex ratio = p / dp;
      Complex repulsion(0.0L);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0L / ((g[i] - g[j]) + (d[i] - d[j]));
      }
      const Complex step = ratio / (1.0L - ratio * repulsion);
      d[i] -= step;
      if (std::abs(step) > step_tol * std::max(std::abs(d[i]), shift_floor)) {
        converged = false;
      }
    }
  }

  std::vector<Real> shifts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real scale = std::max<Real>(1.0L, g[i]);
    if (!converged || !std::isfinite(d[i].real()) || std::abs(d[i].imag()) > kImagTolerance * scale) {
      throw Error(ErrorCode::NoRealSimpleRoots, "shifted iteration did not settle on real roots");
    }
    shifts[i] = d[i].real();
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(g[i] + shifts[i] > g[i + 1] + shifts[i + 1])) {
      throw Error(ErrorCode::NoRealSimpleRoots, "perturbed roots changed order or collided");
    }
  }
  return shifts;
}

PreparedRoots roots_from_coeffs(const RealCoeffs& c, const PreparedRoots* guess) {
  const std::size_t n = c.degree();
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "polynomial has no roots");
  std::vector<Real> extended(c.c.begin(), c.c.end());

  std::vector<Real> found;
  if (guess != nullptr && guess->size() == n) {
    found = root_shifts(extended, *guess);
    for (std::size_t i = 0; i < n; ++i) found[i] += guess->x(i);
  } else {
    found = cold_roots(extended);
  }

  std::vector<double> roots(n);
  const std::vector<Real> a = monic(extended);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = static_cast<double>(found[i]);
    Real p;
    Real dp;
    horner(a, static_cast<Real>(roots[i]), p, dp);
    if (std::abs(p) > static_cast<Real>(kResidualTolerance) * evaluation_scale(a, roots[i])) {
      throw Error(ErrorCode::NoRealSimpleRoots,
                  "residual too large at root " + std::to_string(roots[i]));
    }
  }

  PreparedRoots out = [&] {
    try {
      return PreparedRoots::make(std::move(roots));
    } catch (const Error& e) {
      throw Error(ErrorCode::NoRealSimpleRoots, std::string("roots are not simple and positive: ") + e.what());
    }
  }();

  const RealCoeffs back = elementary_symmetric(out);
  for (std::size_t k = 1; k <= n; ++k) {
    const double ref = std::max(std::abs(c.at(k)), std::numeric_limits<double>::min());
    if (std::abs(back.at(k) - c.at(k)) > kRoundTripTolerance * ref) {
      throw Error(ErrorCode::NoRealSimpleRoots,
                  "coefficient round trip failed at k = " + std::to_string(k));
    }
  }
  return out;
}

}  // namespace lelkit

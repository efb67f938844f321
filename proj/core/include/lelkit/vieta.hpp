#pragma once

// Calculus of the Vieta map F : roots -> elementary symmetric coefficients.
//
// For strictly decreasing positive roots x_1 > ... > x_n with
// w(t) = prod_i (t - x_i), the map F sends x to (c_1, ..., c_n) with
// c_k = sigma_k(x). Its Jacobian has a closed-form inverse
//   (J_F^-1)_{ij} = (-1)^(j-1) x_i^(n-j) / w'(x_i),
// and the weighted power sums s_m = sum_i x_i^m / w'(x_i) vanish for
// m <= n-2 and equal 1 for m = n-1. The same weights give divided
// differences sum_i f(x_i) / w'(x_i) = f^(n-1)(xi) / (n-1)!, whose sign
// settles the sign of the LEL gradient with respect to the coefficients.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lelkit {

inline constexpr double kDefaultGapFloorRel = 1e-8;

/// Strictly decreasing, positive, pairwise-separated roots together with
/// w'(x_i) = prod_{k != i} (x_i - x_k).
class PreparedRoots {
 public:
  /// Sorts `roots` descending and validates them. The gap floor defaults to
  /// kDefaultGapFloorRel * x_1. Throws NonPositiveRoot, RepeatedRoots, or
  /// InvalidOrder for an empty list.
  static PreparedRoots make(std::vector<double> roots, std::optional<double> gap_floor = std::nullopt);

  std::size_t size() const noexcept { return x_.size(); }
  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> omega_prime() const noexcept { return omega_prime_; }
  double x(std::size_t i) const { return x_.at(i); }
  double omega_prime(std::size_t i) const { return omega_prime_.at(i); }
  double min_gap() const noexcept { return min_gap_; }
  double gap_floor() const noexcept { return gap_floor_; }
  double min_abs_omega_prime() const noexcept;

 private:
  PreparedRoots() = default;

  std::vector<double> x_;
  std::vector<double> omega_prime_;
  double min_gap_ = std::numeric_limits<double>::infinity();
  double gap_floor_ = 0.0;
};

/// Coefficients c_1..c_n of prod (t - x_i) = t^n - c_1 t^(n-1) + ... ; c_0 = 1 implicit.
struct RealCoeffs {
  std::vector<double> c;

  std::size_t degree() const noexcept { return c.size(); }
  /// c_k with c_0 = 1 and c_k = 0 for k > degree().
  double at(std::size_t k) const noexcept {
    if (k == 0) return 1.0;
    return k <= c.size() ? c[k - 1] : 0.0;
  }
};

RealCoeffs elementary_symmetric(const PreparedRoots& r);

/// Product-recurrence expansion for arbitrary (possibly repeated) values.
RealCoeffs elementary_symmetric(std::span<const double> values);

enum class JacobianOrientation { Forward, Inverse };

/// Jacobian entries are carried in 113-bit binary floating point: at n = 8
/// with roots up to 10 the forward/inverse products sum terms near 1e12, so
/// entrywise rounding in double or long double alone exceeds 1e-8.
using WideReal = boost::multiprecision::cpp_bin_float_quad;

struct JacobianMatrix {
  using value_type = WideReal;

  std::size_t n = 0;
  JacobianOrientation orientation = JacobianOrientation::Forward;
  std::vector<value_type> entries;  // row-major, 0-based

  const value_type& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// Plain dense product a*b (orientation of the result is that of a).
JacobianMatrix multiply(const JacobianMatrix& a, const JacobianMatrix& b);

/// max_{ij} |m_ij - delta_ij|
double max_deviation_from_identity(const JacobianMatrix& m);

/// d c_i / d x_j, built row by row from
///   dc_1/dx_j = 1,   dc_i/dx_j = c_{i-1} - x_j * dc_{i-1}/dx_j.
JacobianMatrix forward_jacobian(const PreparedRoots& r);

/// d x_i / d c_j = (-1)^(j-1) x_i^(n-j) / w'(x_i).
JacobianMatrix inverse_jacobian_closed_form(const PreparedRoots& r);

/// s_m = sum_i x_i^m / w'(x_i).
double weighted_power_sum(const PreparedRoots& r, std::size_t m);

/// Error scale for s_m: max(1, x_1^m / min|w'|).
double weighted_sum_scale(const PreparedRoots& r, std::size_t m);

/// sum_{t=0..k} (-1)^t c_{k-t} s_{n-1+t}, which vanishes for 1 <= k <= n+1.
double weighted_sum_recurrence_residual(const PreparedRoots& r, std::size_t k);

/// k c_k - sum_{i=1..k} (-1)^(i-1) c_{k-i} p_i with unweighted p_i = sum_j x_j^i.
double newton_identity_residual(const PreparedRoots& r, std::size_t k);

/// Sign of the order-th derivative of f over [lo, hi]: +1, -1, or 0 when unknown.
using DerivativeSign = std::function<int(std::size_t order, double lo, double hi)>;

struct DividedDifference {
  double value = 0.0;
  std::optional<bool> sign_matches;  // set when a DerivativeSign was supplied
};

/// sum_i f(x_i) / w'(x_i): the leading coefficient of the interpolant of f at
/// the roots, i.e. f^(n-1)(xi)/(n-1)! for some xi in [x_n, x_1].
/// Throws NonFiniteFunctionValue.
DividedDifference divided_difference(const std::function<double(double)>& f, const PreparedRoots& r,
                                     const DerivativeSign& sign = {});

/// d LEL / d c_k for k = 1..N over N distinct positive eigenvalues:
///   ((-1)^(k-1) / 2) * sum_i mu_i^(N-k) / (w'(mu_i) sqrt(mu_i)).
/// Every entry is positive. Throws ZeroEigenvalueIncluded if some
/// mu_i <= gap_floor.
std::vector<double> lel_gradient_wrt_coeffs(const PreparedRoots& mu);

/// Sum of square roots of the roots.
double lel_of_roots(const PreparedRoots& mu);

/// Real simple roots of t^n - c_1 t^(n-1) + ... + (-1)^n c_n by simultaneous
/// (Aberth-Ehrlich) iteration. With a `guess` of matching degree the
/// iteration runs in shifted coordinates around it (see root_shifts);
/// otherwise it starts cold from a circle enclosing all roots. Throws
/// NoRealSimpleRoots when the result is not a set of distinct positive real
/// roots with a small residual.
PreparedRoots roots_from_coeffs(const RealCoeffs& c, const PreparedRoots* guess = nullptr);

/// Roots of t^n - c[0] t^(n-1) + c[1] t^(n-2) - ... written as shifts from
/// the roots of a nearby base polynomial, root_i = base.x(i) + shift_i.
///
/// With g = base roots, P(g_i + d) = d * prod_{j != i} (g_i - g_j + d) + R(g_i + d)
/// where R = P - prod (t - g_j) has the small coefficients c - sigma(g). The
/// base factor is evaluated in product form, so the shifts keep full
/// relative accuracy even when they are tiny; finite differences of
/// functions of the roots are formed from these shifts.
std::vector<long double> root_shifts(std::span<const long double> c, const PreparedRoots& base);

}  // namespace lelkit

#include "lelkit/invariants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lelkit/error.hpp"

namespace lelkit {

namespace {

double sqrt_sum(const Spectrum& s) {
  double total = 0.0;
  for (double v : s.values) {
    if (v < 0.0) {
      throw Error(ErrorCode::NegativeEigenvalue, "negative eigenvalue " + std::to_string(v));
    }
    total += std::sqrt(v);
  }
  return total;
}

}  // namespace

double lel(const Spectrum& s) { return sqrt_sum(s); }

double incidence_energy(const Graph& g, double tol) { return sqrt_sum(signless_spectrum(g, tol)); }

double lee(const Spectrum& s) {
  double total = 0.0;
  for (double v : s.values) {
    if (v > kLeeMaxEigenvalue) {
      throw Error(ErrorCode::Overflow, "exp(" + std::to_string(v) + ") overflows the LEE sum");
    }
    total += std::exp(v);
  }
  return total;
}

double lee_star_closed_form(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "star requires n >= 2");
  const double nn = static_cast<double>(n);
  if (nn > kLeeMaxEigenvalue) throw Error(ErrorCode::Overflow, "e^n overflows");
  return std::exp(nn) + 1.0 + (nn - 2.0) * std::numbers::e;
}

double lee_path_closed_form(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "path requires n >= 2");
  double total = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    total += std::exp(2.0 + 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi /
                                           static_cast<double>(n)));
  }
  return total;
}

InvariantRecord compute_invariants(const Graph& g, double tol) {
  InvariantRecord rec;
  rec.n = g.order();
  rec.m = g.size();
  const Spectrum spec = laplacian_spectrum(g, tol);
  rec.lel = lel(spec);
  rec.lee = lee(spec);
  rec.ie = incidence_energy(g, tol);
  rec.wiener = is_connected(g) ? wiener_index(g) : 0;
  return rec;
}

}  // namespace lelkit

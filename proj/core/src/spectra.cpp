#include "lelkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "lelkit/error.hpp"

namespace lelkit {

double Spectrum::sum() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

Spectrum eigenvalues_symmetric(const IntegerMatrix& m, double tol, SpectrumKind kind) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Spectrum out;
  out.tol = tol;
  out.kind = kind;
  if (n == 0) return out;

  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      dense(i, j) = static_cast<double>(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "symmetric eigensolver did not converge");
  }

  const auto& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + n);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());

  if (kind == SpectrumKind::General) return out;

  const double floor = -tol * std::max<double>(1.0, static_cast<double>(m.max_abs()));
  for (double& v : out.values) {
    if (v < floor) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  "eigenvalue " + std::to_string(v) + " of a PSD matrix is below -tol");
    }
    v = std::max(v, 0.0);
  }
  return out;
}

namespace {

struct ComponentCounts {
  std::size_t components = 0;
  std::size_t bipartite = 0;
};

ComponentCounts count_components(const Graph& g) {
  ComponentCounts counts;
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    ++counts.components;
    bool two_colourable = true;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          two_colourable = false;
        }
      }
    }
    if (two_colourable) ++counts.bipartite;
  }
  return counts;
}

// The kernel dimension is known exactly: components for L, bipartite
// components for Q.
void pin_zeros(Spectrum& s, std::size_t zeros) {
  for (std::size_t i = 0; i < zeros && i < s.values.size(); ++i) s.values[s.values.size() - 1 - i] = 0.0;
}

}  // namespace

Spectrum laplacian_spectrum(const Graph& g, double tol) {
  Spectrum s = eigenvalues_symmetric(laplacian_matrix(g), tol, SpectrumKind::Laplacian);
  pin_zeros(s, count_components(g).components);
  return s;
}

Spectrum signless_spectrum(const Graph& g, double tol) {
  Spectrum s = eigenvalues_symmetric(signless_laplacian_matrix(g), tol, SpectrumKind::Signless);
  pin_zeros(s, count_components(g).bipartite);
  return s;
}

Spectrum path_spectrum_closed_form(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "path spectrum requires n >= 1");
  Spectrum out;
  out.tol = 0.0;
  out.values.reserve(n);
  for (std::size_t k = 1; k < n; ++k) {
    out.values.push_back(2.0 + 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi /
                                              static_cast<double>(n)));
  }
  out.values.push_back(0.0);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Spectrum star_spectrum_closed_form(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "star spectrum requires n >= 2");
  Spectrum out;
  out.tol = 0.0;
  out.values.push_back(static_cast<double>(n));
  out.values.insert(out.values.end(), n - 2, 1.0);
  out.values.push_back(0.0);
  return out;
}

}  // namespace lelkit

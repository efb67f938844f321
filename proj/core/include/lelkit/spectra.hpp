#pragma once

#include <cstddef>
#include <vector>

#include "lelkit/graph.hpp"

namespace lelkit {

enum class SpectrumKind { Laplacian, Signless, General };

inline constexpr double kDefaultSpectrumTol = 1e-10;

/// Eigenvalues sorted descending. For Laplacian/signless spectra the values
/// are clamped to be non-negative.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultSpectrumTol;
  SpectrumKind kind = SpectrumKind::Laplacian;

  std::size_t size() const noexcept { return values.size(); }
  double sum() const noexcept;
};

/// Eigenvalues of a real symmetric matrix. `tol` is relative to max(1, |M|_max):
/// for the PSD kinds, estimates in [-tol*scale, 0) are clamped to 0 and
/// anything lower raises NegativeEigenvalue. ConvergenceFailure if the
/// solver gives up.
Spectrum eigenvalues_symmetric(const IntegerMatrix& m, double tol = kDefaultSpectrumTol,
                               SpectrumKind kind = SpectrumKind::General);

/// The smallest (number of components) values are pinned to exactly 0.
Spectrum laplacian_spectrum(const Graph& g, double tol = kDefaultSpectrumTol);
/// The smallest (number of bipartite components) values are pinned to exactly 0.
Spectrum signless_spectrum(const Graph& g, double tol = kDefaultSpectrumTol);

/// {2 + 2cos(k*pi/n) : k = 1..n}; the k = n term is exactly 0.
Spectrum path_spectrum_closed_form(std::size_t n);

/// {n, 1 (n-2 times), 0}.
Spectrum star_spectrum_closed_form(std::size_t n);

}  // namespace lelkit

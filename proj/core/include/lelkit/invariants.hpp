#pragma once

#include <cstddef>
#include <cstdint>

#include "lelkit/graph.hpp"
#include "lelkit/spectra.hpp"

namespace lelkit {

/// Laplacian-like energy: sum of square roots of a Laplacian spectrum.
double lel(const Spectrum& s);

/// Sum of square roots of the signless Laplacian eigenvalues.
double incidence_energy(const Graph& g, double tol = kDefaultSpectrumTol);

/// Laplacian Estrada index, sum of exp over all n eigenvalues.
/// Throws Overflow if any eigenvalue exceeds kLeeMaxEigenvalue.
double lee(const Spectrum& s);

inline constexpr double kLeeMaxEigenvalue = 700.0;

double lee_star_closed_form(std::size_t n);  // e^n + 1 + (n-2)e
double lee_path_closed_form(std::size_t n);  // sum_{k=1..n} e^{2+2cos(k pi/n)}

struct InvariantRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  double lel = 0.0;
  double lee = 0.0;
  double ie = 0.0;
  std::uint64_t wiener = 0;
};

InvariantRecord compute_invariants(const Graph& g, double tol = kDefaultSpectrumTol);

}  // namespace lelkit

#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the library except for the Graph type itself.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lelkit/graph.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// sigma_k by summing products over all k-subsets.
inline std::vector<long double> elementary_by_subsets(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<long double> e(n + 1, 0.0L);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    long double prod = 1.0L;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) prod *= x[i];
    }
    e[static_cast<std::size_t>(std::popcount(mask))] += prod;
  }
  return e;
}

// Complete homogeneous symmetric polynomial h_d(x) by enumerating multisets.
inline long double complete_homogeneous(const std::vector<double>& x, std::size_t d) {
  long double total = 0.0L;
  std::vector<std::size_t> idx(d, 0);
  if (d == 0) return 1.0L;
  for (;;) {
    long double prod = 1.0L;
    for (std::size_t i : idx) prod *= x[i];
    total += prod;
    // next non-decreasing index tuple
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == x.size() - 1) --pos;
    if (pos == 0) return total;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < d; ++j) idx[j] = idx[pos - 1];
  }
}

// Exact determinant by fraction-free Bareiss elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// c_k = sum of all k x k principal minors of a Laplacian-like matrix.
inline std::vector<BigInt> coefficients_by_minors(const lelkit::IntegerMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> c(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) rows.push_back(i);
    }
    std::vector<std::vector<BigInt>> sub(rows.size(), std::vector<BigInt>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) sub[i][j] = m(rows[i], rows[j]);
    }
    c[rows.size()] += determinant(sub);
  }
  return c;
}

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<long>> all_pairs_distances(const lelkit::Graph& g) {
  const std::size_t n = g.order();
  constexpr long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& v : row) {
      if (v >= inf) v = -1;
    }
  }
  return d;
}

inline std::uint64_t wiener_by_floyd(const lelkit::Graph& g) {
  const auto d = all_pairs_distances(g);
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) w += static_cast<std::uint64_t>(d[i][j]);
  }
  return w;
}

// Isomorphism by trying every vertex permutation (n <= 8).
inline bool isomorphic_brute_force(const lelkit::Graph& a, const lelkit::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t n = a.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : b.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!adj[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Uniformly random labelled tree via a textbook Pruefer decoding.
inline lelkit::Graph random_labelled_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return lelkit::Graph(1, {});
  if (n == 2) return lelkit::Graph(2, {{0, 1}});
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t s : seq) ++degree[s];
  std::vector<lelkit::Edge> edges;
  for (std::size_t s : seq) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(static_cast<lelkit::Vertex>(leaf), static_cast<lelkit::Vertex>(s));
        --degree[leaf];
        --degree[s];
        break;
      }
    }
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(static_cast<lelkit::Vertex>(last[0]), static_cast<lelkit::Vertex>(last[1]));
  return lelkit::Graph(n, std::move(edges));
}

// Relabels vertices by a random permutation.
inline lelkit::Graph shuffled(const lelkit::Graph& g, std::mt19937_64& rng) {
  std::vector<lelkit::Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<lelkit::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return lelkit::Graph(g.order(), std::move(edges));
}

// Leading coefficient of the interpolant of (x_i, y_i): solve the Vandermonde
// system by Gaussian elimination with partial pivoting.
inline long double interpolant_leading_coefficient(const std::vector<double>& x, const std::vector<long double>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    long double p = 1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;  // column j holds x^j
      p *= x[i];
    }
    a[i][n] = y[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const long double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return a[n - 1][n] / a[n - 1][n - 1];
}

}  // namespace oracle

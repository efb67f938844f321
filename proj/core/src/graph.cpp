#include "lelkit/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "lelkit/error.hpp"

namespace lelkit {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::InvalidGraph, "duplicate edge");
  }
  adjacency_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool IntegerMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::int64_t IntegerMatrix::max_abs() const noexcept {
  std::int64_t best = 0;
  for (auto e : entries_) best = std::max(best, e < 0 ? -e : e);
  return best;
}

namespace {

IntegerMatrix degree_plus(const Graph& g, std::int64_t off_diagonal) {
  IntegerMatrix m(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    m(v, v) = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
  }
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = off_diagonal;
    m(v, u) = off_diagonal;
  }
  return m;
}

}  // namespace

IntegerMatrix laplacian_matrix(const Graph& g) { return degree_plus(g, -1); }

IntegerMatrix signless_laplacian_matrix(const Graph& g) { return degree_plus(g, +1); }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    queue.assign(1, static_cast<Vertex>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::uint64_t wiener_index(const Graph& g) {
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (dist[v] < 0) {
        throw Error(ErrorCode::DisconnectedGraph,
                    "no path between " + std::to_string(u) + " and " + std::to_string(v));
      }
      total += static_cast<std::uint64_t>(dist[v]);
    }
  }
  return total;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "path_graph requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "star_graph requires n >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidOrder, "cycle_graph requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph read_graph(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::ParseError, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw Error(ErrorCode::ParseError, "bad edge line " + std::to_string(i + 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace lelkit

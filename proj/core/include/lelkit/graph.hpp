#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lelkit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is canonicalized on construction (each pair has first <
/// second, the list is sorted), so two Graph values compare equal exactly
/// when they have the same vertex count and the same labelled edge set.
/// Self-loops, duplicate edges and out-of-range endpoints are rejected with
/// ErrorCode::InvalidGraph.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Dense square matrix of signed integers, row-major.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t order)
      : order_(order), entries_(order * order, 0) {}

  std::size_t order() const noexcept { return order_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  bool is_symmetric() const noexcept;
  std::int64_t max_abs() const noexcept;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<std::int64_t> entries_;
};

IntegerMatrix laplacian_matrix(const Graph& g);
IntegerMatrix signless_laplacian_matrix(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Sum of d(u,v) over unordered pairs. Throws DisconnectedGraph.
std::uint64_t wiener_index(const Graph& g);

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);  // center is vertex 0
Graph cycle_graph(std::size_t n);

// Text format: "n m" on the first line, then m lines "u v".
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
std::string to_text(const Graph& g);

}  // namespace lelkit

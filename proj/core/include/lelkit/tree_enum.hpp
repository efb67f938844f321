#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lelkit/graph.hpp"

namespace lelkit {

inline constexpr std::size_t kDefaultTreeOrderCeiling = 22;

/// Depths of a rooted tree's vertices in preorder; seq[0] = 0 is the root.
struct LevelSequence {
  std::vector<int> seq;

  std::size_t order() const noexcept { return seq.size(); }
  friend bool operator==(const LevelSequence&, const LevelSequence&) = default;
};

/// Tree on vertices 0..n-1 where vertex i is the i-th preorder position.
Graph tree_from_level_sequence(const LevelSequence& levels);

/// Level sequence of a tree rooted at its (first) center, children visited
/// in increasing vertex order. Throws NotATree.
LevelSequence level_sequence_of(const Graph& tree);

/// "n:l0,l1,..." dump line.
std::string format_level_sequence(const LevelSequence& levels);
LevelSequence parse_level_sequence(const std::string& line);

/// Generates one level sequence per isomorphism class of free trees of order
/// n (Wright-Richmond-Odlyzko-McKay successor rule, centered rooting), in a
/// fixed deterministic order.
class FreeTreeGenerator {
 public:
  /// Throws InvalidOrder for n = 0, OrderTooLarge for n > ceiling.
  explicit FreeTreeGenerator(std::size_t n, std::size_t ceiling = kDefaultTreeOrderCeiling);

  std::optional<LevelSequence> next();

 private:
  std::size_t n_;
  std::vector<int> layout_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LevelSequence> all_free_trees(std::size_t n, std::size_t ceiling = kDefaultTreeOrderCeiling);

/// AHU parenthesis code of the tree rooted at its center; for a bicentral
/// tree the smaller of the two rooted codes. Equal iff isomorphic.
struct CanonicalCode {
  std::string code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Graph& t);

/// 16 hex digits of FNV-1a over the canonical code.
std::string tree_id(const CanonicalCode& code);

/// Labelled tree from a Pruefer sequence of length n-2 over [0, n).
Graph tree_from_pruefer(std::span<const Vertex> sequence, std::size_t n);

inline constexpr std::size_t kPrueferCensusCeiling = 9;

/// Number of isomorphism classes among all n^(n-2) labelled trees, found by
/// decoding every Pruefer sequence and deduplicating canonical codes.
/// Throws InvalidOrder for n < 2, OrderTooLarge above kPrueferCensusCeiling.
std::size_t prufer_census(std::size_t n, unsigned jobs = 1);

}  // namespace lelkit

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lelkit/error.hpp"
#include "lelkit/tree_enum.hpp"
#include "oracles.hpp"

using namespace lelkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lelkit::Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("free tree counts up to order 16") {
  // unlabelled free trees, n = 1..16
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(all_free_trees(n).size() == expected[n - 1]);
}

TEST_CASE("order 4 yields the path and the star") {
  const auto trees = all_free_trees(4);
  REQUIRE(trees.size() == 2);
  std::set<CanonicalCode> codes;
  for (const auto& t : trees) codes.insert(canonical_code(tree_from_level_sequence(t)));
  CHECK(codes == std::set<CanonicalCode>{canonical_code(path_graph(4)), canonical_code(star_graph(4))});
}

TEST_CASE("emitted trees are valid and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto trees = all_free_trees(n);
    std::set<CanonicalCode> codes;
    std::size_t stars = 0;
    std::size_t paths = 0;
    for (const auto& levels : trees) {
      CHECK(levels.order() == n);
      CHECK(levels.seq.front() == 0);
      for (std::size_t i = 1; i < n; ++i) CHECK(levels.seq[i] <= levels.seq[i - 1] + 1);
      const Graph g = tree_from_level_sequence(levels);
      CHECK(is_tree(g));
      const CanonicalCode code = canonical_code(g);
      codes.insert(code);
      if (n >= 2 && code == canonical_code(star_graph(n))) ++stars;
      if (code == canonical_code(path_graph(n))) ++paths;
    }
    CHECK(codes.size() == trees.size());
    CHECK(paths == 1);
    if (n >= 2) CHECK(stars == 1);
  }
}

TEST_CASE("small orders are pairwise non-isomorphic by brute force") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto trees = all_free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        CHECK_FALSE(oracle::isomorphic_brute_force(tree_from_level_sequence(trees[i]),
                                                   tree_from_level_sequence(trees[j])));
      }
    }
  }
}

TEST_CASE("generation is deterministic") {
  CHECK(all_free_trees(11) == all_free_trees(11));
  FreeTreeGenerator gen(9);
  std::vector<LevelSequence> streamed;
  while (auto t = gen.next()) streamed.push_back(*t);
  CHECK(streamed == all_free_trees(9));
  CHECK_FALSE(gen.next().has_value());
}

TEST_CASE("order bounds") {
  CHECK(code_of([] { all_free_trees(23); }) == ErrorCode::OrderTooLarge);
  CHECK(code_of([] { all_free_trees(0); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { all_free_trees(9, 8); }) == ErrorCode::OrderTooLarge);
  CHECK(code_of([] { prufer_census(10); }) == ErrorCode::OrderTooLarge);
  CHECK(code_of([] { prufer_census(1); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("canonical code invariance under relabelling") {
  std::mt19937_64 rng(41);
  CHECK(canonical_code(path_graph(4)) == canonical_code(Graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(4)));
  for (int trial = 0; trial < 200; ++trial) {
    const Graph t = oracle::random_labelled_tree(1 + trial % 20, rng);
    CHECK(canonical_code(t) == canonical_code(oracle::shuffled(t, rng)));
  }
}

TEST_CASE("equal codes exactly when brute-force isomorphic") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph a = oracle::random_labelled_tree(n, rng);
    const Graph b = oracle::random_labelled_tree(n, rng);
    CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic_brute_force(a, b));
  }
}

TEST_CASE("canonical code rejects non-trees") {
  CHECK(code_of([] { canonical_code(cycle_graph(3)); }) == ErrorCode::NotATree);
  CHECK(code_of([] { level_sequence_of(Graph(3, {{0, 1}})); }) == ErrorCode::NotATree);
}

TEST_CASE("tree ids") {
  const std::string id = tree_id(canonical_code(path_graph(5)));
  CHECK(id.size() == 16);
  CHECK(id.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(id != tree_id(canonical_code(star_graph(5))));
}

TEST_CASE("pruefer decoding") {
  const std::vector<Vertex> star_seq{3, 3, 3};
  CHECK(tree_from_pruefer(star_seq, 5) == Graph(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
  const std::vector<Vertex> path_seq{1, 2};
  CHECK(tree_from_pruefer(path_seq, 4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  const std::vector<Vertex> none;
  CHECK(tree_from_pruefer(none, 2) == path_graph(2));
}

TEST_CASE("pruefer census small orders") {
  CHECK(prufer_census(2) == 1);
  CHECK(prufer_census(5) == 3);
  CHECK(prufer_census(7) == 11);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(prufer_census(n) == all_free_trees(n).size());
  CHECK(prufer_census(8, 3) == prufer_census(8, 1));
}

TEST_CASE("level sequence text format") {
  const LevelSequence s{{0, 1, 2, 1}};
  CHECK(format_level_sequence(s) == "4:0,1,2,1");
  CHECK(parse_level_sequence("4:0,1,2,1") == s);
  CHECK(parse_level_sequence(format_level_sequence(LevelSequence{{0}})) == LevelSequence{{0}});
  CHECK(code_of([] { parse_level_sequence("3:0,1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_level_sequence("0,1,2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_level_sequence("3:0,2,1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_level_sequence("2:1,2"); }) == ErrorCode::ParseError);
}

TEST_CASE("level sequences round trip through graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph t = oracle::random_labelled_tree(1 + trial % 15, rng);
    const LevelSequence s = level_sequence_of(t);
    CHECK(canonical_code(tree_from_level_sequence(s)) == canonical_code(t));
  }
  CHECK(tree_from_level_sequence(LevelSequence{{0, 1, 2, 1}}) == Graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

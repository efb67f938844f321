#include <doctest.h>

#include "lelkit/charpoly.hpp"
#include "lelkit/dominance.hpp"
#include "lelkit/error.hpp"
#include "lelkit/tree_enum.hpp"

using namespace lelkit;

namespace {

// Reference verdict straight from the definition.
Dominance reference(const ExactCoeffs& a, const ExactCoeffs& b) {
  bool le = true;
  bool ge = true;
  for (std::size_t k = 1; k + 1 <= a.n; ++k) {
    le = le && a.c[k] <= b.c[k];
    ge = ge && a.c[k] >= b.c[k];
  }
  if (le && ge) return Dominance::EQ;
  if (le) return Dominance::LE;
  if (ge) return Dominance::GE;
  return Dominance::Incomparable;
}

}  // namespace

TEST_CASE("star below path at order 4") {
  const auto v = dominance(laplacian_coefficients(star_graph(4)), laplacian_coefficients(path_graph(4)));
  CHECK(v.relation == Dominance::LE);
  CHECK(v.witness == std::optional<std::size_t>{2});
  CHECK(v.strictly_below());
  const auto w = dominance(laplacian_coefficients(path_graph(4)), laplacian_coefficients(star_graph(4)));
  CHECK(w.relation == Dominance::GE);
  CHECK(w.strictly_above());
}

TEST_CASE("a coefficient vector equals itself") {
  const auto c = laplacian_coefficients(path_graph(6));
  const auto v = dominance(c, c);
  CHECK(v.relation == Dominance::EQ);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("star, chair and path at order 5 form a chain") {
  const Graph chair(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  const auto s = laplacian_coefficients(star_graph(5));
  const auto c = laplacian_coefficients(chair);
  const auto p = laplacian_coefficients(path_graph(5));
  CHECK(dominance(s, c).relation == Dominance::LE);
  CHECK(dominance(c, p).relation == Dominance::LE);
  CHECK(dominance(s, p).relation == Dominance::LE);
}

TEST_CASE("verdicts match the definition on all pairs of order 9") {
  std::vector<ExactCoeffs> coeffs;
  for (const auto& t : all_free_trees(9)) coeffs.push_back(laplacian_coefficients(tree_from_level_sequence(t)));
  std::size_t incomparable = 0;
  for (const auto& a : coeffs) {
    for (const auto& b : coeffs) {
      const auto v = dominance(a, b);
      CHECK(v.relation == reference(a, b));
      if (v.relation == Dominance::Incomparable) ++incomparable;
      if (v.relation != Dominance::EQ) {
        REQUIRE(v.witness.has_value());
        CHECK(a.c[*v.witness] != b.c[*v.witness]);
        for (std::size_t k = 1; k < *v.witness; ++k) CHECK(a.c[k] == b.c[k]);
      }
    }
  }
  CHECK(incomparable > 0);
}

TEST_CASE("orders must match") {
  try {
    dominance(laplacian_coefficients(path_graph(4)), laplacian_coefficients(path_graph(5)));
    FAIL("expected OrderMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
}

TEST_CASE("relation names") {
  CHECK(to_string(Dominance::LE) == "LE");
  CHECK(to_string(Dominance::GE) == "GE");
  CHECK(to_string(Dominance::EQ) == "EQ");
  CHECK(to_string(Dominance::Incomparable) == "INCOMPARABLE");
}

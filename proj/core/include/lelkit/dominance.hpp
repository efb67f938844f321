#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "lelkit/charpoly.hpp"

namespace lelkit {

enum class Dominance { LE, GE, EQ, Incomparable };

std::string_view to_string(Dominance d) noexcept;

struct DominanceVerdict {
  Dominance relation = Dominance::EQ;
  std::optional<std::size_t> witness;  // first k with c_k(a) != c_k(b)

  bool strictly_below() const noexcept { return relation == Dominance::LE; }
  bool strictly_above() const noexcept { return relation == Dominance::GE; }
};

/// Entrywise comparison of c_1..c_{n-1} (c_0 and c_n are always equal for
/// Laplacians of the same order). Throws OrderMismatch.
DominanceVerdict dominance(const ExactCoeffs& a, const ExactCoeffs& b);

}  // namespace lelkit

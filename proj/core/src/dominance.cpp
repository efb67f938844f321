#include "lelkit/dominance.hpp"

#include "lelkit/error.hpp"

namespace lelkit {

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::LE: return "LE";
    case Dominance::GE: return "GE";
    case Dominance::EQ: return "EQ";
    case Dominance::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

DominanceVerdict dominance(const ExactCoeffs& a, const ExactCoeffs& b) {
  if (a.n != b.n || a.c.size() != b.c.size()) {
    throw Error(ErrorCode::OrderMismatch, "cannot compare coefficient vectors of different order");
  }
  bool below = false;
  bool above = false;
  DominanceVerdict out;
  for (std::size_t k = 1; k + 1 <= a.n; ++k) {
    const int cmp = a.c[k].compare(b.c[k]);
    if (cmp == 0) continue;
    if (!out.witness) out.witness = k;
    (cmp < 0 ? below : above) = true;
  }
  if (below && above) {
    out.relation = Dominance::Incomparable;
  } else if (below) {
    out.relation = Dominance::LE;
  } else if (above) {
    out.relation = Dominance::GE;
  } else {
    out.relation = Dominance::EQ;
  }
  return out;
}

}  // namespace lelkit

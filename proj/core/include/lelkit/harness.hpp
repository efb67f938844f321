#pragma once

// Verification campaigns: exhaustive scans over enumerated trees and seeded
// scans over random root vectors. Every campaign returns a Report whose
// content depends only on its parameters (never on --jobs or timing).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "lelkit/charpoly.hpp"
#include "lelkit/dominance.hpp"
#include "lelkit/report.hpp"
#include "lelkit/tree_enum.hpp"
#include "lelkit/vieta.hpp"

namespace lelkit {

struct TreeRecord {
  std::string id;  // tree_id(code)
  CanonicalCode code;
  std::size_t n = 0;
  LevelSequence levels;
  ExactCoeffs coeffs;
  double lel = 0.0;
  double lee = 0.0;
  double ie = 0.0;
  std::uint64_t wiener = 0;
};

TreeRecord make_tree_record(const LevelSequence& levels);
TreeRecord make_tree_record(const Graph& tree);

/// One record per isomorphism class of order n, sorted by canonical code.
std::vector<TreeRecord> coefficient_table(std::size_t n, unsigned jobs = 1);

void write_table_csv(std::ostream& out, const std::vector<TreeRecord>& table);
void write_table_json(std::ostream& out, const std::vector<TreeRecord>& table);

struct OrderCheckRecord {
  std::string lower_id;  // G with c(G) <= c(H)
  std::string upper_id;  // H
  DominanceVerdict verdict;
  double lel_gap = 0.0;  // lel(H) - lel(G)
  double lee_gap = 0.0;  // lee(H) - lee(G)
  bool violation_lel = false;
  bool violation_lee = false;
};

/// Compare a and b, orienting the result so the lower record comes first.
/// EQ pairs keep the given order. Incomparable pairs yield no flags.
OrderCheckRecord check_order(const TreeRecord& a, const TreeRecord& b, double slack);

/// Seeded sampler for strictly decreasing root vectors in (lo, hi) whose
/// consecutive gaps are at least min_gap, uniform over that region. Uses
/// mt19937_64 bits directly so draws are identical on every platform.
class RootSampler {
 public:
  explicit RootSampler(std::uint64_t seed) : engine_(seed) {}

  std::vector<double> draw(std::size_t count, double lo, double hi, double min_gap);

 private:
  double uniform();

  std::mt19937_64 engine_;
};

struct JacobianCampaign {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t samples = 200;
  double min_gap = 0.3;
  double tol = 1e-7;
  std::uint64_t seed = 1;
};
Report verify_jacobian(const JacobianCampaign& params);

struct PowerSumCampaign {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t samples = 200;
  double min_gap = 0.3;
  double tol = 1e-9;
  std::size_t max_recurrence_k = 5;
  std::uint64_t seed = 1;
};
Report verify_power_sums(const PowerSumCampaign& params);

struct GradientCampaign {
  std::size_t n_min = 3;  // graph order; N = n-1 nonzero eigenvalues in (0.1, n)
  std::size_t n_max = 8;
  std::size_t samples = 500;
  double fd_step = 1e-6;  // absolute step on one coefficient
  double tol = 1e-4;
  double min_gap = 0.3;
  std::uint64_t seed = 1;
};
Report verify_gradient(const GradientCampaign& params);

Report verify_identities(std::size_t n_max, unsigned jobs = 1);
Report verify_extremal(std::size_t n_max, unsigned jobs = 1);
Report verify_lel_order(std::size_t n, double slack, unsigned jobs = 1);
Report verify_census(std::size_t n_max, unsigned jobs = 1);

inline constexpr std::size_t kFullPairScanMax = 10;

/// Pairs with c(G) strictly below c(H) yet lee(G) > lee(H) + slack. Orders up
/// to full_scan_max get a full pair scan; larger orders check (S_n, P_n)
/// only. Passes when (S_n, P_n) is flagged for every n >= 6 in range.
Report hunt_lee_violations(std::size_t n_min, std::size_t n_max, double slack, unsigned jobs = 1,
                           std::size_t full_scan_max = kFullPairScanMax);

/// Approaches a spectrum with one coincident pair by splitting it as
/// (v + d, v - d) with d halving each step. Passes when every gradient entry
/// stays positive, LEL changes by at most cauchy_tol over the last two
/// steps, and the limit point itself is refused. A spectrum without a
/// repeat is evaluated once. Throws InvalidOrder for more than one repeat.
Report closure_probe(const std::vector<double>& mu_limit, std::size_t steps, double cauchy_tol = 1e-9);

}  // namespace lelkit

#include "lelkit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <type_traits>
#include <unordered_map>

#include <json.hpp>

#include "lelkit/error.hpp"
#include "lelkit/invariants.hpp"
#include "lelkit/parallel.hpp"
#include "lelkit/spectra.hpp"

namespace lelkit {

namespace {

template <typename T>
Field field(std::string key, const T& value) {
  if constexpr (std::is_same_v<T, bool>) {
    return Field{std::move(key), value};
  } else if constexpr (std::is_floating_point_v<T>) {
    return Field{std::move(key), static_cast<double>(value)};
  } else if constexpr (std::is_integral_v<T>) {
    return Field{std::move(key), static_cast<std::int64_t>(value)};
  } else {
    return Field{std::move(key), std::string(value)};
  }
}

std::vector<LevelSequence> trees_of_order(std::size_t n) { return all_free_trees(n); }

}  // namespace

// ---------------------------------------------------------------------------
// Tree records

TreeRecord make_tree_record(const LevelSequence& levels) {
  const Graph g = tree_from_level_sequence(levels);
  TreeRecord rec;
  rec.code = canonical_code(g);
  rec.id = tree_id(rec.code);
  rec.n = g.order();
  rec.levels = levels;
  rec.coeffs = laplacian_coefficients(g);
  const Spectrum spec = laplacian_spectrum(g);
  rec.lel = lel(spec);
  rec.lee = lee(spec);
  rec.ie = incidence_energy(g);
  rec.wiener = wiener_index(g);
  return rec;
}

TreeRecord make_tree_record(const Graph& tree) { return make_tree_record(level_sequence_of(tree)); }

std::vector<TreeRecord> coefficient_table(std::size_t n, unsigned jobs) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "coefficient_table needs n >= 1");
  const auto trees = trees_of_order(n);
  std::vector<TreeRecord> table(trees.size());
  parallel_for(trees.size(), jobs, [&](std::size_t i) { table[i] = make_tree_record(trees[i]); });
  std::sort(table.begin(), table.end(),
            [](const TreeRecord& a, const TreeRecord& b) { return a.code < b.code; });
  return table;
}

void write_table_csv(std::ostream& out, const std::vector<TreeRecord>& table) {
  const std::size_t n = table.empty() ? 0 : table.front().n;
  out << "n,tree_id,level_sequence";
  for (std::size_t k = 0; k <= n; ++k) out << ",c" << k;
  out << ",lel,lee,ie,wiener\n";
  for (const auto& rec : table) {
    out << rec.n << ',' << rec.id << ",\"";
    for (std::size_t i = 0; i < rec.levels.seq.size(); ++i) out << (i ? "," : "") << rec.levels.seq[i];
    out << '"';
    for (const auto& c : rec.coeffs.c) out << ',' << c.str();
    out << ',' << format_double(rec.lel) << ',' << format_double(rec.lee) << ','
        << format_double(rec.ie) << ',' << rec.wiener << '\n';
  }
}

void write_table_json(std::ostream& out, const std::vector<TreeRecord>& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : table) {
    nlohmann::ordered_json j;
    j["n"] = rec.n;
    j["tree_id"] = rec.id;
    j["level_sequence"] = rec.levels.seq;
    j["coefficients"] = to_decimal_strings(rec.coeffs);
    j["lel"] = rec.lel;
    j["lee"] = rec.lee;
    j["ie"] = rec.ie;
    j["wiener"] = rec.wiener;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

OrderCheckRecord check_order(const TreeRecord& a, const TreeRecord& b, double slack) {
  OrderCheckRecord out;
  out.verdict = dominance(a.coeffs, b.coeffs);
  const bool swap = out.verdict.relation == Dominance::GE;
  const TreeRecord& lower = swap ? b : a;
  const TreeRecord& upper = swap ? a : b;
  if (swap) out.verdict.relation = Dominance::LE;
  out.lower_id = lower.id;
  out.upper_id = upper.id;
  out.lel_gap = upper.lel - lower.lel;
  out.lee_gap = upper.lee - lower.lee;
  if (out.verdict.relation == Dominance::LE) {
    out.violation_lel = out.lel_gap < -slack;
    out.violation_lee = out.lee_gap < -slack;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random root vectors

double RootSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<double> RootSampler::draw(std::size_t count, double lo, double hi, double min_gap) {
  const double free_length = (hi - lo) - static_cast<double>(count > 0 ? count - 1 : 0) * min_gap;
  if (count == 0 || free_length <= 0.0) {
    throw Error(ErrorCode::InvalidOrder, "cannot place roots with the requested gap in the interval");
  }
  std::vector<double> u(count);
  for (auto& v : u) v = uniform() * free_length;
  std::sort(u.begin(), u.end());
  std::vector<double> roots(count);
  for (std::size_t i = 0; i < count; ++i) roots[i] = lo + u[i] + static_cast<double>(i) * min_gap;
  std::reverse(roots.begin(), roots.end());
  return roots;
}

namespace {

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format_double(xs[i]);
  return out;
}

std::string join(std::span<const double> xs) { return join(std::vector<double>(xs.begin(), xs.end())); }

}  // namespace

// ---------------------------------------------------------------------------
// Seeded campaigns over root vectors

Report verify_jacobian(const JacobianCampaign& p) {
  if (p.n_min < 1 || p.n_max < p.n_min) throw Error(ErrorCode::InvalidOrder, "need 1 <= n_min <= n_max");
  Report report;
  report.check = "verify jacobian";
  report.params = {field("n_min", p.n_min), field("n_max", p.n_max), field("samples", p.samples),
                   field("min_gap", p.min_gap), field("tol", p.tol),
                   field("seed", static_cast<std::int64_t>(p.seed))};
  RootSampler sampler(p.seed);
  for (std::size_t n = p.n_min; n <= p.n_max; ++n) {
    double worst_fi = 0.0;
    double worst_if = 0.0;
    for (std::size_t s = 0; s < p.samples; ++s) {
      const auto r = PreparedRoots::make(sampler.draw(n, 0.1, 10.0, p.min_gap));
      const JacobianMatrix fwd = forward_jacobian(r);
      const JacobianMatrix inv = inverse_jacobian_closed_form(r);
      const double fi = max_deviation_from_identity(multiply(fwd, inv));
      const double ifw = max_deviation_from_identity(multiply(inv, fwd));
      worst_fi = std::max(worst_fi, fi);
      worst_if = std::max(worst_if, ifw);
      ++report.cases_checked;
      if (!(fi <= p.tol) || !(ifw <= p.tol)) {
        report.violations.push_back({field("n", n), field("sample", s), field("roots", join(r.x())),
                                     field("forward_inverse_dev", fi),
                                     field("inverse_forward_dev", ifw)});
      }
    }
    report.observations.push_back({field("n", n), field("max_forward_inverse_dev", worst_fi),
                                   field("max_inverse_forward_dev", worst_if)});
  }
  report.passed = report.violations.empty();
  return report;
}

Report verify_power_sums(const PowerSumCampaign& p) {
  if (p.n_min < 1 || p.n_max < p.n_min) throw Error(ErrorCode::InvalidOrder, "need 1 <= n_min <= n_max");
  Report report;
  report.check = "verify lemmas";
  report.params = {field("n_min", p.n_min), field("n_max", p.n_max), field("samples", p.samples),
                   field("min_gap", p.min_gap), field("tol", p.tol),
                   field("max_recurrence_k", p.max_recurrence_k),
                   field("seed", static_cast<std::int64_t>(p.seed))};
  RootSampler sampler(p.seed);
  for (std::size_t n = p.n_min; n <= p.n_max; ++n) {
    double worst = 0.0;  // largest |residual| / scale
    for (std::size_t s = 0; s < p.samples; ++s) {
      const auto r = PreparedRoots::make(sampler.draw(n, 0.1, 10.0, p.min_gap));
      auto check = [&](const char* identity, std::size_t index, double residual, double scale) {
        ++report.cases_checked;
        worst = std::max(worst, std::abs(residual) / scale);
        if (!(std::abs(residual) <= p.tol * scale)) {
          report.violations.push_back({field("n", n), field("sample", s), field("identity", identity),
                                       field("index", index), field("residual", residual),
                                       field("scale", scale), field("roots", join(r.x()))});
        }
      };
      for (std::size_t m = 0; m + 2 <= n; ++m) {
        check("s_m=0", m, weighted_power_sum(r, m), weighted_sum_scale(r, m));
      }
      check("s_(n-1)=1", n - 1, weighted_power_sum(r, n - 1) - 1.0, weighted_sum_scale(r, n - 1));
      for (std::size_t k = 1; k <= std::min(p.max_recurrence_k, n + 1); ++k) {
        check("weighted_recurrence", k, weighted_sum_recurrence_residual(r, k),
              weighted_sum_scale(r, n - 1 + k));
      }
      const RealCoeffs c = elementary_symmetric(r);
      for (std::size_t k = 1; k <= n; ++k) {
        double scale = static_cast<double>(k) * c.at(k);
        for (std::size_t i = 1; i <= k; ++i) {
          double pi = 0.0;
          for (double x : r.x()) pi += std::pow(x, static_cast<double>(i));
          scale += c.at(k - i) * pi;
        }
        check("newton", k, newton_identity_residual(r, k), std::max(1.0, scale));
      }
    }
    report.observations.push_back({field("n", n), field("max_scaled_residual", worst)});
  }
  report.passed = report.violations.empty();
  return report;
}

Report verify_gradient(const GradientCampaign& p) {
  Report report;
  report.check = "verify gradient";
  report.params = {field("n_min", p.n_min), field("n_max", p.n_max), field("samples", p.samples),
                   field("fd_step", p.fd_step), field("tol", p.tol), field("min_gap", p.min_gap),
                   field("seed", static_cast<std::int64_t>(p.seed))};
  if (p.n_min < 2 || p.n_max < p.n_min) throw Error(ErrorCode::InvalidOrder, "need 2 <= n_min <= n_max");

  RootSampler sampler(p.seed);
  const std::size_t span = p.n_max - p.n_min + 1;
  double worst_rel = 0.0;
  double min_entry = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < p.samples; ++s) {
    const std::size_t n = p.n_min + s % span;
    const auto mu = PreparedRoots::make(sampler.draw(n - 1, 0.1, static_cast<double>(n), p.min_gap));
    const std::vector<double> grad = lel_gradient_wrt_coeffs(mu);
    // Coefficients in long double; the step is absolute and the perturbed
    // polynomials are re-rooted as shifts from the sampled roots.
    std::vector<long double> sigma(mu.size() + 1, 0.0L);
    sigma[0] = 1.0L;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t k = i + 1; k >= 1; --k) sigma[k] += static_cast<long double>(mu.x(i)) * sigma[k - 1];
    }
    const std::vector<long double> base(sigma.begin() + 1, sigma.end());
    for (std::size_t k = 1; k <= grad.size(); ++k) {
      ++report.cases_checked;
      const double g = grad[k - 1];
      min_entry = std::min(min_entry, g);
      const long double h = p.fd_step;
      std::optional<double> fd;
      std::string failure;
      try {
        std::vector<long double> up = base;
        std::vector<long double> down = base;
        up[k - 1] += h;
        down[k - 1] -= h;
        const auto shift_up = root_shifts(up, mu);
        const auto shift_down = root_shifts(down, mu);
        long double delta = 0.0L;
        for (std::size_t i = 0; i < mu.size(); ++i) {
          const long double x = mu.x(i);
          delta += (shift_up[i] - shift_down[i]) / (std::sqrt(x + shift_up[i]) + std::sqrt(x + shift_down[i]));
        }
        fd = static_cast<double>(delta / (2.0L * h));
      } catch (const Error& e) {
        failure = e.what();
      }
      const double rel = fd ? std::abs(*fd - g) / std::abs(g) : std::numeric_limits<double>::infinity();
      if (fd) worst_rel = std::max(worst_rel, rel);
      if (!(g > 0.0) || !(rel <= p.tol)) {
        Finding v{field("sample", s), field("n", n), field("k", k), field("gradient", g),
                  field("roots", join(mu.x()))};
        if (fd) {
          v.push_back(field("finite_difference", *fd));
          v.push_back(field("relative_error", rel));
        } else {
          v.push_back(field("error", failure));
        }
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.observations.push_back({field("max_relative_error", worst_rel), field("min_gradient_entry", min_entry)});
  report.passed = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive campaigns over trees

Report verify_identities(std::size_t n_max, unsigned jobs) {
  Report report;
  report.check = "verify identities";
  report.params = {field("n_max", n_max)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto trees = trees_of_order(n);
    std::vector<std::optional<Finding>> outcome(trees.size());
    parallel_for(trees.size(), jobs, [&](std::size_t i) {
      const Graph g = tree_from_level_sequence(trees[i]);
      const ExactCoeffs coeffs = laplacian_coefficients(g);
      const auto identities = verify_coefficient_identities(g, coeffs);
      std::string failed;
      for (const auto& chk : identities.checks) {
        if (!chk.pass) {
          failed += (failed.empty() ? "" : ";") + chk.name + " expected " + chk.expected.str() +
                    " got " + chk.actual.str();
        }
      }
      for (std::size_t k = 0; k <= n; ++k) {
        if (coeffs.c[k] < 0) failed += (failed.empty() ? "" : ";") + std::string("negative c") + std::to_string(k);
      }
      if (!failed.empty()) {
        outcome[i] = Finding{field("n", n), field("level_sequence", format_level_sequence(trees[i])),
                             field("failed", failed)};
      }
    });
    report.cases_checked += trees.size();
    for (auto& o : outcome) {
      if (o) report.violations.push_back(std::move(*o));
    }
    report.observations.push_back({field("n", n), field("trees", trees.size())});
  }
  report.passed = report.violations.empty();
  return report;
}

Report verify_extremal(std::size_t n_max, unsigned jobs) {
  Report report;
  report.check = "verify extremal";
  report.params = {field("n_max", n_max)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto trees = trees_of_order(n);
    report.cases_checked += trees.size();
    if (n < 2) continue;
    const Graph star = star_graph(n);
    const Graph path = path_graph(n);
    const ExactCoeffs lower = laplacian_coefficients(star);
    const ExactCoeffs upper = laplacian_coefficients(path);
    const CanonicalCode star_code = canonical_code(star);
    const CanonicalCode path_code = canonical_code(path);

    std::vector<std::vector<Finding>> found(trees.size());
    std::vector<int> is_star(trees.size(), 0);
    std::vector<int> is_path(trees.size(), 0);
    parallel_for(trees.size(), jobs, [&](std::size_t i) {
      const Graph g = tree_from_level_sequence(trees[i]);
      const CanonicalCode code = canonical_code(g);
      is_star[i] = code == star_code;
      is_path[i] = code == path_code;
      const ExactCoeffs c = laplacian_coefficients(g);
      for (std::size_t k = 0; k <= n; ++k) {
        const char* side = nullptr;
        if (c.c[k] < lower.c[k]) side = "below star";
        if (c.c[k] > upper.c[k]) side = "above path";
        if (side != nullptr) {
          found[i].push_back({field("n", n), field("tree_id", tree_id(code)),
                              field("level_sequence", format_level_sequence(trees[i])), field("k", k),
                              field("side", side), field("c_k", c.c[k].str()),
                              field("star_c_k", lower.c[k].str()), field("path_c_k", upper.c[k].str())});
        }
      }
    });
    for (auto& f : found) {
      for (auto& v : f) report.violations.push_back(std::move(v));
    }
    const auto stars = std::count(is_star.begin(), is_star.end(), 1);
    const auto paths = std::count(is_path.begin(), is_path.end(), 1);
    if (stars != 1 || paths != 1) {
      report.violations.push_back({field("n", n), field("side", "enumeration"),
                                   field("star_representatives", static_cast<std::int64_t>(stars)),
                                   field("path_representatives", static_cast<std::int64_t>(paths))});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

namespace {

std::size_t find_record(const std::vector<TreeRecord>& table, const Graph& g) {
  const CanonicalCode code = canonical_code(g);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].code == code) return i;
  }
  throw Error(ErrorCode::InvalidGraph, "tree missing from the enumeration");
}

struct PairStats {
  std::uint64_t pairs = 0;
  std::uint64_t strict = 0;
  std::uint64_t equal = 0;
  std::uint64_t incomparable = 0;
  double min_strict_gap = std::numeric_limits<double>::infinity();
  std::vector<Finding> violations;
};

}  // namespace

Report verify_lel_order(std::size_t n, double slack, unsigned jobs) {
  Report report;
  report.check = "verify order";
  report.params = {field("n", n), field("slack", slack)};
  const auto table = coefficient_table(n, jobs);

  std::vector<PairStats> rows(table.size());
  parallel_for(
      table.size(), jobs,
      [&](std::size_t i) {
        auto& st = rows[i];
        for (std::size_t j = i + 1; j < table.size(); ++j) {
          ++st.pairs;
          const OrderCheckRecord rec = check_order(table[i], table[j], slack);
          switch (rec.verdict.relation) {
            case Dominance::Incomparable:
              ++st.incomparable;
              break;
            case Dominance::EQ: {
              ++st.equal;
              const double diff = table[j].lel - table[i].lel;
              if (std::abs(diff) > slack) {
                st.violations.push_back({field("lower", rec.lower_id), field("upper", rec.upper_id),
                                         field("relation", "EQ"), field("lel_gap", diff)});
              }
              break;
            }
            default:
              ++st.strict;
              st.min_strict_gap = std::min(st.min_strict_gap, rec.lel_gap);
              if (rec.violation_lel) {
                st.violations.push_back({field("lower", rec.lower_id), field("upper", rec.upper_id),
                                         field("relation", "LE"),
                                         field("witness_k", *rec.verdict.witness),
                                         field("lel_gap", rec.lel_gap)});
              }
          }
        }
      },
      1);

  PairStats total;
  for (auto& st : rows) {
    total.pairs += st.pairs;
    total.strict += st.strict;
    total.equal += st.equal;
    total.incomparable += st.incomparable;
    total.min_strict_gap = std::min(total.min_strict_gap, st.min_strict_gap);
    for (auto& v : st.violations) report.violations.push_back(std::move(v));
  }
  report.cases_checked = total.pairs;
  Finding summary{field("trees", table.size()),
                  field("strict_pairs", static_cast<std::int64_t>(total.strict)),
                  field("equal_pairs", static_cast<std::int64_t>(total.equal)),
                  field("incomparable_pairs", static_cast<std::int64_t>(total.incomparable))};
  if (total.strict > 0) summary.push_back(field("min_strict_lel_gap", total.min_strict_gap));
  report.observations.push_back(std::move(summary));

  if (n >= 4) {
    const auto& star = table[find_record(table, star_graph(n))];
    const auto& path = table[find_record(table, path_graph(n))];
    const OrderCheckRecord sp = check_order(star, path, slack);
    const bool ok = sp.verdict.relation == Dominance::LE && sp.lower_id == star.id && sp.lel_gap > 0.0;
    report.observations.push_back({field("pair", "star-path"),
                                   field("relation", std::string(to_string(sp.verdict.relation))),
                                   field("lel_star", star.lel), field("lel_path", path.lel),
                                   field("lel_gap", sp.lel_gap), field("strict_positive", ok)});
    if (!ok) {
      report.violations.push_back({field("lower", star.id), field("upper", path.id),
                                   field("relation", std::string(to_string(sp.verdict.relation))),
                                   field("lel_gap", sp.lel_gap)});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

Report verify_census(std::size_t n_max, unsigned jobs) {
  Report report;
  report.check = "verify census";
  report.params = {field("n_max", n_max)};
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto trees = trees_of_order(n);
    std::vector<CanonicalCode> codes;
    codes.reserve(trees.size());
    for (const auto& t : trees) codes.push_back(canonical_code(tree_from_level_sequence(t)));
    std::sort(codes.begin(), codes.end());
    const bool distinct = std::adjacent_find(codes.begin(), codes.end()) == codes.end();
    const std::size_t census = prufer_census(n, jobs);
    ++report.cases_checked;
    report.observations.push_back({field("n", n), field("generated", trees.size()), field("census", census)});
    if (!distinct || census != trees.size()) {
      report.violations.push_back({field("n", n), field("generated", trees.size()), field("census", census),
                                   field("distinct_codes", distinct)});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

Report hunt_lee_violations(std::size_t n_min, std::size_t n_max, double slack, unsigned jobs,
                           std::size_t full_scan_max) {
  if (n_min < 2 || n_max < n_min) throw Error(ErrorCode::InvalidOrder, "need 2 <= n_min <= n_max");
  Report report;
  report.check = "hunt lee";
  report.params = {field("n_min", n_min), field("n_max", n_max), field("slack", slack),
                   field("full_scan_max", full_scan_max)};
  bool expectation_met = true;

  auto flag = [&](std::size_t n, const OrderCheckRecord& rec, double lee_lower, double lee_upper) {
    report.violations.push_back({field("n", n), field("lower", rec.lower_id), field("upper", rec.upper_id),
                                 field("witness_k", rec.verdict.witness.value_or(0)),
                                 field("lee_lower", lee_lower), field("lee_upper", lee_upper)});
  };

  for (std::size_t n = n_min; n <= n_max; ++n) {
    const TreeRecord star = make_tree_record(star_graph(n));
    const TreeRecord path = make_tree_record(path_graph(n));
    const OrderCheckRecord sp = check_order(star, path, slack);
    const bool star_below = sp.verdict.relation == Dominance::LE && sp.lower_id == star.id;
    const bool sp_flagged = star_below && sp.violation_lee;
    std::size_t flagged = 0;

    if (n <= full_scan_max) {
      const auto table = coefficient_table(n, jobs);
      std::vector<std::vector<OrderCheckRecord>> rows(table.size());
      parallel_for(
          table.size(), jobs,
          [&](std::size_t i) {
            for (std::size_t j = i + 1; j < table.size(); ++j) {
              OrderCheckRecord rec = check_order(table[i], table[j], slack);
              if (rec.violation_lee) rows[i].push_back(std::move(rec));
            }
          },
          1);
      std::unordered_map<std::string, double> lee_by_id;
      for (const auto& r : table) lee_by_id[r.id] = r.lee;
      for (const auto& row : rows) {
        for (const auto& rec : row) {
          flag(n, rec, lee_by_id[rec.lower_id], lee_by_id[rec.upper_id]);
          ++flagged;
        }
      }
      report.cases_checked += table.size() * (table.size() - 1) / 2;
    } else {
      ++report.cases_checked;
      if (sp_flagged) {
        flag(n, sp, star.lee, path.lee);
        ++flagged;
      }
    }

    if (n >= 6 && !sp_flagged) expectation_met = false;
    report.observations.push_back({field("n", n), field("pairs_flagged", flagged),
                                   field("star_path_flagged", sp_flagged),
                                   field("star_below_path", star_below), field("lee_star", star.lee),
                                   field("lee_path", path.lee)});
  }
  report.passed = expectation_met;
  return report;
}

Report closure_probe(const std::vector<double>& mu_limit, std::size_t steps, double cauchy_tol) {
  Report report;
  report.check = "probe closure";
  report.params = {field("mu", join(mu_limit)), field("steps", steps), field("cauchy_tol", cauchy_tol)};
  if (mu_limit.empty()) throw Error(ErrorCode::InvalidOrder, "probe needs at least one eigenvalue");

  std::vector<double> sorted = mu_limit;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::optional<std::size_t> repeat;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) {
      if (repeat) throw Error(ErrorCode::InvalidOrder, "probe supports exactly one coincident pair");
      repeat = i;
    }
  }

  auto evaluate = [&](const std::vector<double>& mu, std::size_t step, double delta) -> std::optional<double> {
    const auto r = PreparedRoots::make(mu);
    const auto grad = lel_gradient_wrt_coeffs(r);
    const double min_entry = *std::min_element(grad.begin(), grad.end());
    const double value = lel_of_roots(r);
    ++report.cases_checked;
    report.observations.push_back({field("step", step), field("delta", delta), field("lel", value),
                                   field("min_gradient_entry", min_entry),
                                   field("gradient_positive", min_entry > 0.0)});
    if (!(min_entry > 0.0)) {
      report.violations.push_back({field("step", step), field("delta", delta),
                                   field("min_gradient_entry", min_entry)});
    }
    return value;
  };

  if (!repeat) {
    evaluate(sorted, 0, 0.0);
    report.passed = report.violations.empty();
    return report;
  }

  const double v = sorted[*repeat];
  std::vector<double> others;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i != *repeat && i != *repeat + 1) others.push_back(sorted[i]);
  }
  double separation = std::numeric_limits<double>::infinity();
  for (double o : others) separation = std::min(separation, std::abs(o - v));
  const double delta0 = std::min({1.0, separation / 2.0, v / 2.0});

  std::vector<double> values;
  for (std::size_t t = 0; t < steps; ++t) {
    const double delta = std::ldexp(delta0, -static_cast<int>(t));
    std::vector<double> mu = others;
    mu.push_back(v + delta);
    mu.push_back(v - delta);
    try {
      values.push_back(*evaluate(mu, t, delta));
    } catch (const Error& e) {
      report.observations.push_back({field("step", t), field("delta", delta), field("refused", e.what())});
      break;
    }
  }

  bool limit_refused = false;
  try {
    PreparedRoots::make(sorted);
  } catch (const Error& e) {
    limit_refused = e.code() == ErrorCode::RepeatedRoots;
  }
  double limit_lel = 0.0;
  for (double m : sorted) limit_lel += std::sqrt(m);

  Finding summary{field("limit_refused", limit_refused), field("limit_lel", limit_lel)};
  bool cauchy = false;
  if (values.size() >= 2) {
    const double last_change = std::abs(values.back() - values[values.size() - 2]);
    cauchy = last_change <= cauchy_tol;
    summary.push_back(field("last_lel_change", last_change));
    summary.push_back(field("distance_to_limit_lel", std::abs(values.back() - limit_lel)));
  }
  summary.push_back(field("cauchy", cauchy));
  report.observations.push_back(std::move(summary));
  if (!cauchy) report.violations.push_back({field("cauchy", false), field("steps_completed", values.size())});
  if (!limit_refused) report.violations.push_back({field("limit_refused", false)});
  report.passed = report.violations.empty();
  return report;
}

}  // namespace lelkit

// lelkit command-line entry point.
//
// Exit codes: 0 all checks pass, 1 violation found, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lelkit/error.hpp"
#include "lelkit/harness.hpp"
#include "lelkit/report.hpp"
#include "lelkit/tree_enum.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  unsigned jobs = 0;
  std::string format = "json";
  bool quiet = false;
};

lelkit::ReportFormat report_format(const std::string& name) {
  return name == "csv" ? lelkit::ReportFormat::Csv : lelkit::ReportFormat::Json;
}

int emit(const lelkit::Report& report, const GlobalOptions& g) {
  if (!g.quiet) lelkit::write_report(std::cout, report, report_format(g.format));
  return report.passed ? kExitPass : kExitViolation;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw lelkit::Error(lelkit::ErrorCode::ParseError, "cannot open " + path + " for writing");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian-like energy toolkit: tree enumeration, invariants and verification campaigns"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--quiet", g.quiet, "Suppress report output; rely on the exit code");

  // enum
  std::size_t enum_n = 0;
  std::string enum_dump;
  std::string dump_format = "levels";
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate free trees of order n");
  enum_cmd->add_option("--n", enum_n, "Tree order")->required();
  enum_cmd->add_option("--dump", enum_dump, "Write every tree to this file");
  enum_cmd->add_option("--dump-format", dump_format, "levels: one level sequence per line; graph: edge lists")
      ->check(CLI::IsMember({"levels", "graph"}));

  // invariants
  std::size_t inv_n = 0;
  std::string inv_out;
  auto* inv_cmd = app.add_subcommand("invariants", "Coefficient and invariant table for all trees of order n");
  inv_cmd->add_option("--n", inv_n, "Tree order")->required();
  inv_cmd->add_option("--out", inv_out, "Output file")->required();
  inv_cmd->add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}));

  // verify ...
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd->require_subcommand(1);

  lelkit::JacobianCampaign jac;
  auto* jac_cmd = verify_cmd->add_subcommand("jacobian", "Forward/inverse Vieta Jacobian products against identity");
  jac_cmd->add_option("--n-min", jac.n_min);
  jac_cmd->add_option("--n-max", jac.n_max);
  jac_cmd->add_option("--samples", jac.samples, "Samples per n");
  jac_cmd->add_option("--min-gap", jac.min_gap);
  jac_cmd->add_option("--tol", jac.tol);
  jac_cmd->add_option("--seed", jac.seed);

  lelkit::PowerSumCampaign lem;
  auto* lem_cmd = verify_cmd->add_subcommand("lemmas", "Weighted power sums, their recurrence and Newton identities");
  lem_cmd->add_option("--n-min", lem.n_min);
  lem_cmd->add_option("--n-max", lem.n_max);
  lem_cmd->add_option("--samples", lem.samples, "Samples per n");
  lem_cmd->add_option("--min-gap", lem.min_gap);
  lem_cmd->add_option("--tol", lem.tol);
  lem_cmd->add_option("--seed", lem.seed);

  std::size_t ident_n_max = 16;
  auto* ident_cmd = verify_cmd->add_subcommand("identities", "Exact tree coefficient identities");
  ident_cmd->add_option("--n-max", ident_n_max);

  std::size_t ext_n_max = 14;
  auto* ext_cmd = verify_cmd->add_subcommand("extremal", "Star/path coefficient bounds over all trees");
  ext_cmd->add_option("--n-max", ext_n_max);

  std::size_t order_n = 10;
  double order_slack = 1e-9;
  auto* order_cmd = verify_cmd->add_subcommand("order", "Coefficient dominance implies LEL order");
  order_cmd->add_option("--n", order_n)->required();
  order_cmd->add_option("--slack", order_slack);

  lelkit::GradientCampaign grad;
  auto* grad_cmd = verify_cmd->add_subcommand("gradient", "LEL gradient positivity and finite-difference agreement");
  grad_cmd->add_option("--samples", grad.samples);
  grad_cmd->add_option("--fd-step", grad.fd_step);
  grad_cmd->add_option("--tol", grad.tol);
  grad_cmd->add_option("--seed", grad.seed);
  grad_cmd->add_option("--n-min", grad.n_min, "Smallest graph order sampled");
  grad_cmd->add_option("--n-max", grad.n_max, "Largest graph order sampled");

  std::size_t census_n_max = 9;
  auto* census_cmd = verify_cmd->add_subcommand("census", "Free-tree counts against a Pruefer-sequence census");
  census_cmd->add_option("--n-max", census_n_max);

  // hunt lee
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for order counterexamples");
  hunt_cmd->require_subcommand(1);
  std::size_t hunt_n_min = 6;
  std::size_t hunt_n_max = 15;
  double hunt_slack = 1e-9;
  auto* lee_cmd = hunt_cmd->add_subcommand("lee", "Dominated pairs with reversed LEE order");
  lee_cmd->add_option("--n-min", hunt_n_min);
  lee_cmd->add_option("--n-max", hunt_n_max);
  lee_cmd->add_option("--slack", hunt_slack);

  // probe closure
  auto* probe_cmd = app.add_subcommand("probe", "Numerical probes");
  probe_cmd->require_subcommand(1);
  std::vector<double> probe_mu;
  std::size_t probe_steps = 20;
  auto* closure_cmd = probe_cmd->add_subcommand("closure", "Gradient along a sequence approaching a repeated eigenvalue");
  closure_cmd->add_option("--mu", probe_mu, "Limit spectrum, comma separated")->required()->delimiter(',');
  closure_cmd->add_option("--steps", probe_steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const unsigned jobs = g.jobs;
  try {
    if (*enum_cmd) {
      const auto trees = lelkit::all_free_trees(enum_n);
      if (!enum_dump.empty()) {
        auto out = open_output(enum_dump);
        for (const auto& t : trees) {
          if (dump_format == "graph") {
            lelkit::write_graph(out, lelkit::tree_from_level_sequence(t));
          } else {
            out << lelkit::format_level_sequence(t) << '\n';
          }
        }
      }
      if (!g.quiet) std::cout << "n=" << enum_n << " trees=" << trees.size() << '\n';
      return kExitPass;
    }
    if (*inv_cmd) {
      const auto table = lelkit::coefficient_table(inv_n, jobs);
      auto out = open_output(inv_out);
      if (g.format == "csv") {
        lelkit::write_table_csv(out, table);
      } else {
        lelkit::write_table_json(out, table);
      }
      if (!g.quiet) std::cout << "wrote " << table.size() << " records to " << inv_out << '\n';
      return kExitPass;
    }
    if (*jac_cmd) return emit(lelkit::verify_jacobian(jac), g);
    if (*lem_cmd) return emit(lelkit::verify_power_sums(lem), g);
    if (*ident_cmd) return emit(lelkit::verify_identities(ident_n_max, jobs), g);
    if (*ext_cmd) return emit(lelkit::verify_extremal(ext_n_max, jobs), g);
    if (*order_cmd) return emit(lelkit::verify_lel_order(order_n, order_slack, jobs), g);
    if (*grad_cmd) return emit(lelkit::verify_gradient(grad), g);
    if (*census_cmd) return emit(lelkit::verify_census(census_n_max, jobs), g);
    if (*lee_cmd) return emit(lelkit::hunt_lee_violations(hunt_n_min, hunt_n_max, hunt_slack, jobs), g);
    if (*closure_cmd) return emit(lelkit::closure_probe(probe_mu, probe_steps), g);
  } catch (const lelkit::Error& e) {
    std::cerr << "error (" << lelkit::to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

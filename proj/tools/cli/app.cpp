#include "cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "cli/run_config.hpp"
#include "cli/tables.hpp"
#include "cli/verify.hpp"
#include "hardy/exact.hpp"

namespace hardy::cli {

namespace {

void add_output_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
  cmd.add_option("--out", config.out, "Write output to this path instead of standard output");
}

void add_range_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--n", config.n, "Single order n");
  cmd.add_option("--n-start", config.n_start, "First n of a range");
  cmd.add_option("--n-stop", config.n_stop, "Last n of a range (inclusive)");
  cmd.add_option("--grid", config.grid, "Spacing of the range")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Grid>{{"linear", Grid::linear}, {"geometric", Grid::geometric}}));
  cmd.add_option("--step", config.step, "Step of a linear grid");
  cmd.add_option("--ratio", config.ratio, "Ratio of a geometric grid");
  cmd.add_option("--threads", config.threads, "Worker threads (0: one per core)");
}

void add_solver_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--tol", config.tol, "Bisection bracket width")->check(CLI::PositiveNumber);
}

int emit(const RunConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (config.out.empty()) {
    write(out);
    return kExitOk;
  }
  std::ofstream file(config.out);
  if (!file) throw UsageError("cannot open '" + config.out + "' for writing");
  write(file);
  return kExitOk;
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
  const auto records = compute_records(n_values(config), kinds(config.kind), config.tol,
                                       effective_threads(config.threads));
  return emit(config, out, [&](std::ostream& os) { write_records(os, records, config.format); });
}

int cmd_asymptotics(RunConfig config, std::ostream& out) {
  if (!config.n && !config.n_start && !config.n_stop) {
    config.n_start = 10;
    config.n_stop = 100000;
    config.grid = Grid::geometric;
  }
  if (config.n || config.grid != Grid::geometric) throw UsageError("asymptotics needs a geometric range");
  const auto rows = compute_asymptotics(n_values(config), config.tol, effective_threads(config.threads));
  return emit(config, out, [&](std::ostream& os) { write_asymptotics(os, rows, config.format); });
}

int cmd_exact(const RunConfig& config, std::ostream& out) {
  const auto sequence = exact::parse_sequence(config.what);
  if (!sequence) throw UsageError("unknown sequence '" + config.what + "'");
  if (config.index && config.upto) throw UsageError("give either a single index or --upto, not both");
  if (!config.index && !config.upto) throw UsageError("give --m/--k or --upto");
  const std::size_t last = config.index ? *config.index : *config.upto;
  const auto table = exact::sequence_table(*sequence, last);
  if (last < table.first_index) {
    throw UsageError("index " + std::to_string(last) + " is below the first index " +
                     std::to_string(table.first_index) + " of " + config.what);
  }
  const std::size_t first = config.index ? last : table.first_index;
  return emit(config, out, [&](std::ostream& os) { write_exact(os, table, first, last, config.format); });
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.max_m = config.max_m;
  options.tol = config.tol;
  options.seed = config.seed;
  options.only = config.only;
  const auto fault = parse_fault(config.inject_fault);
  if (!fault) throw UsageError("unknown fault '" + config.inject_fault + "'");
  options.fault = *fault;
  const auto results = run_verify(options);
  emit(config, out, [&](std::ostream& os) { write_verify_report(os, results); });
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Best constants of the finite-dimensional Hardy inequalities", "hardy"};
  app.require_subcommand(1);

  const std::map<std::string, KindSelection> kind_names{
      {"discrete", KindSelection::discrete}, {"continuous", KindSelection::continuous}, {"both", KindSelection::both}};

  auto* compute = app.add_subcommand("compute", "Compute c_n and/or d_n over a range of n");
  add_range_options(*compute, config);
  add_solver_options(*compute, config);
  add_output_options(*compute, config);
  compute->add_option("--kind", config.kind, "Which constant")->transform(CLI::CheckedTransformer(kind_names));

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_solver_options(*verify, config);
  verify->add_option("--max-m", config.max_m, "Largest m for the exact determinant and linkage checks");
  verify->add_option("--seed", config.seed, "Seed for random-vector checks");
  verify->add_option("--only", config.only, "Run only these checks")->delimiter(',');
  verify->add_option("--inject-fault", config.inject_fault, "Corrupt an input on purpose (split_A, det_D)");
  verify->add_option("--out", config.out, "Write the report to this path");

  auto* exact_cmd = app.add_subcommand("exact", "Print exact values of a rational sequence");
  exact_cmd->add_option("--what", config.what, "y, q1, delta, u, detD or detG")->required();
  auto* m_opt = exact_cmd->add_option("--m", config.index, "Single index");
  exact_cmd->add_option("--k", config.index, "Single index (alias of --m)")->excludes(m_opt);
  exact_cmd->add_option("--upto", config.upto, "Print every index up to this one");
  add_output_options(*exact_cmd, config);

  auto* asym = app.add_subcommand("asymptotics", "Tabulate 4 - c_n and 4 - d_n against ln n");
  add_range_options(*asym, config);
  add_solver_options(*asym, config);
  add_output_options(*asym, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (exact_cmd->parsed()) return cmd_exact(config, out);
    return cmd_asymptotics(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hardy::cli

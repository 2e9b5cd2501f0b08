#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orbisev/cli/commands.hpp"
#include "orbisev/cli/report.hpp"
#include "orbisev/cli/sweep.hpp"

namespace cli = orbisev::cli;

namespace {

constexpr int kUsageError = 3;

void emit(const cli::Json& doc, bool json) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << cli::render_text(doc);
}

int report_error(const orbisev::Error& e, bool json) {
  cli::Json doc{{"error", {{"kind", orbisev::error_kind_name(e.kind())}, {"message", e.what()}}}};
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cerr << "error: " << e.what() << "\n";
  return cli::exit_code_for(e.kind());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local triple products at ADE quotient singularities"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output")->configurable(false);

  cli::Job job;
  auto* check = app.add_subcommand("check", "Evaluate one pair (f, g) against #classes * |G| - 1");
  check->add_option("--group", job.group, "ADE label (A0 is trivial)")->default_val("A1");
  check->add_option("-f", job.f, "first invariant")->required();
  check->add_option("-g", job.g, "second invariant")->required();
  check->add_option("--field", job.field, "Q, Q(i), cyclo:N or min:<poly in z>")->default_val("Q");
  check->add_option("--puiseux-order", job.puiseux_order, "Puiseux precision floor")->check(CLI::NonNegativeNumber);
  check->add_flag("--oracle,!--no-oracle", job.oracle, "cross-check pairings and the Jacobian splitting identity");
  check->add_flag("--timing", job.timing, "include wall-clock time (breaks byte determinism)");
  check->add_flag("--json", json, "JSON output");

  cli::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Seeded random invariant pairs");
  sweep->add_option("--group", sweep_opts.group, "ADE label")->default_val("A1");
  sweep->add_option("--max-degree", sweep_opts.max_degree)->default_val(6)->check(CLI::PositiveNumber);
  sweep->add_option("--count", sweep_opts.count, "evaluated instances")->default_val(100)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_opts.seed)->default_val(42);
  sweep->add_option("--puiseux-order", sweep_opts.puiseux_order)->check(CLI::NonNegativeNumber);
  sweep->add_option("--threads", sweep_opts.threads, "0 uses every core")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--json", json, "JSON output");

  std::string k2 = "0", euler = "0";
  std::vector<std::string> sings;
  auto* ledger = app.add_subcommand("ledger", "Global ledger from K^2, e and the singularities");
  ledger->add_option("--k2", k2, "K^2 of the minimal resolution")->required();
  ledger->add_option("--euler", euler, "topological Euler number of the resolution")->required();
  ledger->add_option("--sing", sings, "ADE label, repeatable");
  ledger->add_flag("--json", json, "JSON output");

  bool list = false;
  std::vector<std::string> group_labels;
  auto* groups_cmd = app.add_subcommand("groups", "ADE group tables");
  groups_cmd->add_flag("--list", list, "every group in the catalog");
  groups_cmd->add_option("--group", group_labels, "ADE label, repeatable");
  groups_cmd->add_flag("--json", json, "JSON output");

  cli::OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Cross-validate the independent algorithms");
  oracle->add_option("--seed", oracle_opts.seed)->default_val(7);
  oracle->add_option("--count", oracle_opts.intersection_pairs, "intersection pairs")->default_val(200);
  oracle->add_option("--max-degree", oracle_opts.max_degree)->default_val(6)->check(CLI::PositiveNumber);
  oracle->add_flag("--json", json, "JSON output");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Recheck the arithmetic of a saved JSON report");
  verify->add_option("report", report_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    if (*check) {
      cli::Report r = cli::run_check(job);
      emit(cli::to_json(r), json);
      return cli::exit_code(r);
    }
    if (*sweep) {
      cli::SweepSummary s = cli::run_sweep(sweep_opts);
      emit(cli::to_json(s), json);
      return cli::exit_code(s);
    }
    if (*ledger) {
      orbisev::exactalg::Integer a, b;
      if (a.set_str(k2, 10) != 0 || b.set_str(euler, 10) != 0) {
        std::cerr << "error: --k2 and --euler take integers\n";
        return kUsageError;
      }
      emit(cli::run_ledger(a, b, sings), json);
      return 0;
    }
    if (*groups_cmd) {
      if (list) group_labels = orbisev::groups::catalog();
      if (group_labels.empty()) {
        std::cerr << "error: give --list or --group\n";
        return kUsageError;
      }
      emit(cli::groups_table(group_labels), json);
      return 0;
    }
    if (*oracle) {
      cli::OracleSummary s = cli::run_oracle(oracle_opts);
      emit(cli::to_json(s), json);
      return s.mismatches.empty() ? 0 : 2;
    }
    if (*verify) {
      std::ifstream in(report_path);
      cli::Json doc;
      try {
        doc = cli::Json::parse(in);
      } catch (const cli::Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
      }
      auto issues = cli::verify_report(doc);
      for (const auto& i : issues) std::cout << "inconsistent: " << i << "\n";
      if (issues.empty()) std::cout << "ok\n";
      return issues.empty() ? 0 : 2;
    }
  } catch (const orbisev::Error& e) {
    return report_error(e, json);
  }
  return kUsageError;
}

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qsep/cli/commands.hpp"
#include "qsep/cli/report.hpp"

int main(int argc, char** argv) {
  using namespace qsep::cli;

  CLI::App app{"Entanglement witness for three- and four-qubit density matrices", "qsep"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GlobalOptions global;
  double tol = 0.0;
  std::string format = "human";
  app.add_option("--tol", tol, "Tolerance for validation and the PPT test (default 1e-9)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_flag("--no-validate", global.no_validate, "Skip density-matrix validation of the input");

  std::string path;
  std::string label;

  auto* analyze = app.add_subcommand("analyze", "Run the PPT witness over every reduction of a state file");
  analyze->add_option("file", path, "Matrix file, or - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "Emit one two-qubit reduction as a matrix file");
  reduce->add_option("file", path, "Matrix file, or - for stdin")->required();
  reduce->add_option("--label", label, "Reduction label, e.g. A,BC or AB,CD")->required();

  MakeStateOptions make;
  auto* make_state = app.add_subcommand("make-state", "Write a named state as a matrix file");
  make_state->add_option("family", make.family, "ghz, werner, embed, molecule, upb or product")->required();
  make_state->add_option("--qubits", make.qubits, "ghz: number of qubits (3 or 4)")->capture_default_str();
  make_state->add_option("--x", make.x, "werner: mixing weight in [0, 1]");
  make_state->add_option("--way", make.way, "embed: embedding 1..6");
  make_state->add_option("--r", make.r_path, "embed: two-qubit matrix file (Bell state if omitted)");
  make_state->add_option("--p-ab", make.p_ab, "molecule: AB bond weight");
  make_state->add_option("--p-ac", make.p_ac, "molecule: AC bond weight");
  make_state->add_option("--p-bc", make.p_bc, "molecule: BC bond weight");
  for (auto [flag, target] : {std::pair{"--a", &make.a}, {"--b", &make.b}, {"--c", &make.c}, {"--d", &make.d}}) {
    make_state->add_option(flag, *target, "product: qubit amplitudes re0,re1 or re0,im0,re1,im1")
        ->delimiter(',')
        ->expected(2, 4);
  }

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Scan a one-parameter family and locate verdict changes");
  sweep_cmd->add_option("family", sweep.family, "werner or molecule")->required();
  sweep_cmd->add_option("--from", sweep.from, "Start of the parameter range")->capture_default_str();
  sweep_cmd->add_option("--to", sweep.to, "End of the parameter range")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of evenly spaced points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (app.count("--tol") > 0) global.tol = tol;
  global.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;

  if (*analyze) return cmd_analyze(path, global, std::cout, std::cerr);
  if (*reduce) return cmd_reduce(path, label, global, std::cout, std::cerr);
  if (*make_state) return cmd_make_state(make, global, std::cout, std::cerr);
  return cmd_sweep(sweep, global, std::cout, std::cerr);
}

#include <CLI11.hpp>
#include <iostream>

#include "bihardy/runner.hpp"

namespace {

void add_common_options(CLI::App* cmd, bihardy::RunConfig& cfg) {
  cmd->add_option("--input", cfg.input_path, "Generator-set JSON file");
  cmd->add_option("--demo", cfg.demo_name,
                  "Built-in fixture: full_space | monomial | blaschke | nonbeurling");
  cmd->add_option("--d1", cfg.d1, "Max degree in z1 (overrides the input window)");
  cmd->add_option("--d2", cfg.d2, "Max degree in z2 (overrides the input window)");
  cmd->add_option("--margin", cfg.margin, "Interior margin (overrides the input window)");
  cmd->add_option("--rank-tol", cfg.tols.rank_tol, "Relative rank cutoff");
  cmd->add_option("--dc-tol", cfg.tols.dc_tol, "Doubly-commuting defect tolerance");
  cmd->add_option("--inner-tol", cfg.tols.inner_tol, "Innerness tolerance");
  cmd->add_option("--dist-tol", cfg.tols.dist_tol, "Beurling distance tolerance");
  cmd->add_option("--seed", cfg.seed, "Sample seed");
  cmd->add_option("--samples", cfg.samples, "Number of identity sample points");
  cmd->add_flag("--json", cfg.json_output, "Emit the JSON report instead of a summary");
  cmd->add_flag("--corrupt-shift", cfg.corrupt_shift)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift-invariant subspace laboratory for the degree-truncated "
               "Hardy space on the bidisc"};
  app.require_subcommand(1);

  bihardy::RunConfig cfg;

  CLI::App* analyze =
      app.add_subcommand("analyze", "Run the full analysis pipeline on a generator set");
  add_common_options(analyze, cfg);
  CLI::App* demo = app.add_subcommand("demo", "Analyze a built-in fixture");
  add_common_options(demo, cfg);
  CLI::App* sweep =
      app.add_subcommand("sweep", "Residual sweep of the kernel identities vs tail bounds");
  add_common_options(sweep, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bihardy::kExitBadConfig;
  }

  if (analyze->parsed()) {
    cfg.command = bihardy::RunConfig::Command::Analyze;
  } else if (demo->parsed()) {
    cfg.command = bihardy::RunConfig::Command::Demo;
  } else if (sweep->parsed()) {
    cfg.command = bihardy::RunConfig::Command::Sweep;
  }

  return bihardy::run_command(cfg, std::cout, std::cerr);
}

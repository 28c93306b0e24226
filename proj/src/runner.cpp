#include "bihardy/runner.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "bihardy/fixtures.hpp"
#include "bihardy/sampling.hpp"
#include "bihardy/serialize.hpp"

namespace bihardy {

namespace {

using nlohmann::json;

struct ResolvedInput {
  DegreeWindow window;
  GeneratorSet gens;
  bool from_file = false;
};

DegreeWindow apply_overrides(const DegreeWindow& base, const RunConfig& cfg) {
  return DegreeWindow(cfg.d1.value_or(base.d1), cfg.d2.value_or(base.d2),
                      cfg.margin.value_or(base.margin));
}

ResolvedInput resolve_input(const RunConfig& cfg) {
  if (cfg.input_path) {
    std::ifstream in(*cfg.input_path);
    if (!in) {
      throw InvalidInput("cannot open input file: " + *cfg.input_path);
    }
    json parsed;
    try {
      in >> parsed;
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("JSON parse error: ") + e.what());
    }
    GeneratorFile file = generator_set_from_json(parsed);
    return ResolvedInput{file.window, std::move(file.gens), true};
  }
  DemoFixture fixture = demo_fixture(*cfg.demo_name);
  return ResolvedInput{fixture.window, std::move(fixture.gens), false};
}

std::string format_tol(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

/// The human summary is rendered from the JSON report, never computed
/// separately.
void print_summary(const json& report, std::ostream& out) {
  const json& w = report["window"];
  out << "verdict: " << report["verdict"].get<std::string>() << "\n";
  out << "window: d1=" << w["d1"] << " d2=" << w["d2"] << " margin=" << w["margin"]
      << "   dim=" << report["dim"] << "\n";
  out << "dc defect: " << format_tol(report["dc_defect"].get<double>()) << " (tol "
      << format_tol(report["tolerances"]["dc_tol"].get<double>()) << ")\n";
  out << "wandering dimension: " << report["wandering_dim"] << "\n";
  if (!report["phi"].is_null()) {
    const json& inner = report["inner"];
    out << "phi coefficients: " << report["phi"].dump() << "\n";
    out << "innerness: origin=" << format_tol(inner["origin"].get<double>())
        << " max_offorigin=" << format_tol(inner["max_offorigin"].get<double>())
        << " is_inner=" << (inner["is_inner"].get<bool>() ? "true" : "false") << "\n";
  } else {
    out << "phi: none\n";
  }
  if (!report["phi_route_agreement"].is_null()) {
    out << "route agreement: "
        << format_tol(report["phi_route_agreement"].get<double>()) << "\n";
  }
  if (!report["beurling_distance"].is_null()) {
    out << "beurling distance: "
        << format_tol(report["beurling_distance"].get<double>()) << " (tol "
        << format_tol(report["tolerances"]["dist_tol"].get<double>()) << ")\n";
  }
  const json& residuals = report["identity_residuals"];
  if (!residuals.empty()) {
    std::map<std::string, std::pair<double, double>> table;
    for (const auto& rec : residuals) {
      auto& cell = table[rec["name"].get<std::string>()];
      cell.first = std::max(cell.first, rec["residual"].get<double>());
      cell.second = std::max(cell.second, rec["tail_bound"].get<double>());
    }
    out << "identity residuals (max residual / max tail bound):\n";
    for (const auto& [name, cell] : table) {
      out << "  " << name << ": " << format_tol(cell.first) << " / "
          << format_tol(cell.second) << "\n";
    }
  }
  out << "seed: " << report["seed"] << "\n";
}

int run_analysis(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ResolvedInput input = resolve_input(cfg);
  DegreeWindow window;
  try {
    window = apply_overrides(input.window, cfg);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  try {
    const BeurlingVerdict verdict = beurling_verdict(input.gens, window, cfg.tols);
    std::vector<IdentityRecord> records;
    if (verdict.phi) {
      records = identity_suite(verdict.basis, verdict.phi->candidate, cfg.seed,
                               cfg.samples, cfg.tols);
    }
    const json report = build_analysis_report(verdict, records, cfg.tols, cfg.seed);
    if (cfg.json_output) {
      out << report.dump(2) << "\n";
    } else {
      print_summary(report, out);
    }
    return kExitOk;
  } catch (const EmptySpan& e) {
    err << "error: " << e.what() << "\n";
    return kExitEmptySpan;
  } catch (const EmptyInterior& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const WindowOverflow& e) {
    err << "error: " << e.what() << "\n";
    return input.from_file ? kExitBadInput : kExitBadConfig;
  }
}

struct SweepRow {
  std::string fixture;
  std::string check;
  double max_residual = 0.0;
  double max_bound = 0.0;
  bool pass = true;
};

OrthonormalBasis corrupted_copy(const OrthonormalBasis& basis) {
  std::vector<HardyElement> vectors = basis.vectors();
  // Emulates a shift that lost its isometry: the first vector is rescaled.
  vectors[0] *= Complex(1.0 + 1e-3, 0.0);
  return OrthonormalBasis(basis.window(), std::move(vectors), basis.rank_tol());
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  const double slack = cfg.tols.inner_tol;

  for (const std::string name : {"full_space", "monomial", "blaschke"}) {
    DemoFixture fixture = demo_fixture(name);
    const BeurlingVerdict verdict =
        beurling_verdict(fixture.gens, fixture.window, cfg.tols);
    if (!verdict.phi) {
      err << "error: fixture " << name << " produced no candidate\n";
      return kExitSweepFail;
    }
    const OrthonormalBasis basis =
        cfg.corrupt_shift ? corrupted_copy(verdict.basis) : verdict.basis;
    try {
      const std::vector<IdentityRecord> records = identity_suite(
          basis, verdict.phi->candidate, cfg.seed, cfg.samples, cfg.tols);
      std::map<std::string, SweepRow> per_name;
      for (const auto& rec : records) {
        SweepRow& row = per_name[rec.name];
        row.fixture = name;
        row.check = rec.name;
        row.max_residual = std::max(row.max_residual, rec.residual);
        row.max_bound = std::max(row.max_bound, rec.tail_bound);
        row.pass = row.pass && rec.residual <= rec.tail_bound + slack;
      }
      for (auto& [_, row] : per_name) rows.push_back(row);
    } catch (const Error& e) {
      // A failing identity computation is itself the regression signal.
      SweepRow row;
      row.fixture = name;
      row.check = std::string("error: ") + e.what();
      row.pass = false;
      rows.push_back(row);
    }
  }

  // Adjoint-Toeplitz kernel identity across fixed polynomial symbols.
  const DegreeWindow toeplitz_window(12, 12, 2);
  std::vector<std::pair<std::string, HardyElement>> symbols;
  symbols.emplace_back("z1", HardyElement::monomial(toeplitz_window, 1, 0));
  symbols.emplace_back("z2", HardyElement::monomial(toeplitz_window, 0, 1));
  HardyElement one_plus = HardyElement::monomial(toeplitz_window, 0, 0);
  one_plus.set_coeff(1, 1, Complex(1.0, 0.0));
  symbols.emplace_back("1+z1z2", one_plus);

  for (const auto& [label, symbol] : symbols) {
    SampleStream stream(cfg.seed);
    SweepRow row;
    row.fixture = "toeplitz";
    row.check = label;
    for (int s = 0; s < cfg.samples; ++s) {
      const DiscPoint p = stream.polydisc(0.5);
      const double residual = toeplitz_kernel_identity_check(symbol, p, toeplitz_window);
      const double bound = toeplitz_tail_bound(symbol, p, toeplitz_window);
      row.max_residual = std::max(row.max_residual, residual);
      row.max_bound = std::max(row.max_bound, bound);
      row.pass = row.pass && residual <= bound + slack;
    }
    rows.push_back(row);
  }

  bool all_pass = true;
  json table = json::array();
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    table.push_back(json{{"fixture", row.fixture},
                         {"check", row.check},
                         {"max_residual", row.max_residual},
                         {"max_tail_bound", row.max_bound},
                         {"pass", row.pass}});
  }
  json report{{"seed", cfg.seed},
              {"samples", cfg.samples},
              {"pass", all_pass},
              {"results", table}};
  if (cfg.json_output) {
    out << report.dump(2) << "\n";
  } else {
    out << "sweep: seed=" << cfg.seed << " samples=" << cfg.samples << "\n";
    for (const auto& row : report["results"]) {
      out << "  " << (row["pass"].get<bool>() ? "pass" : "FAIL") << "  "
          << row["fixture"].get<std::string>() << " / "
          << row["check"].get<std::string>() << ": "
          << format_tol(row["max_residual"].get<double>()) << " <= "
          << format_tol(row["max_tail_bound"].get<double>()) << " + " << slack << "\n";
    }
    out << (all_pass ? "all residuals within bounds\n" : "bound violations found\n");
  }
  return all_pass ? kExitOk : kExitSweepFail;
}

std::optional<std::string> validate(const RunConfig& cfg) {
  if (cfg.samples < 1) {
    return "samples must be at least 1";
  }
  if (cfg.d1 && *cfg.d1 < 0) return "d1 must be nonnegative";
  if (cfg.d2 && *cfg.d2 < 0) return "d2 must be nonnegative";
  if (cfg.margin && *cfg.margin < 0) return "margin must be nonnegative";
  const bool analysis = cfg.command == RunConfig::Command::Analyze ||
                        cfg.command == RunConfig::Command::Demo;
  if (analysis) {
    if (cfg.input_path.has_value() == cfg.demo_name.has_value()) {
      return "exactly one of --input and --demo is required";
    }
    if (cfg.command == RunConfig::Command::Demo && !cfg.demo_name) {
      return "demo requires --demo <name>";
    }
  }
  return std::nullopt;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return kExitBadConfig;
  }
  try {
    switch (config.command) {
      case RunConfig::Command::Analyze:
      case RunConfig::Command::Demo:
        return run_analysis(config, out, err);
      case RunConfig::Command::Sweep:
        return run_sweep(config, out, err);
    }
    return kExitBadConfig;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    // Unknown demo names and bad window overrides are configuration errors;
    // everything else malformed comes from the input file.
    const bool config_error =
        !config.input_path.has_value() ||
        std::string(e.what()).find("unknown demo") != std::string::npos;
    return config_error ? kExitBadConfig : kExitBadInput;
  } catch (const EmptySpan& e) {
    err << "error: " << e.what() << "\n";
    return kExitEmptySpan;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
}

}  // namespace bihardy

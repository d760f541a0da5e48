/// \file nlslab_main.cpp
/// Command-line front end. Each command runs a fixed registry of scenarios,
/// prints one PASS/FAIL line per check, writes artifacts under --out, and
/// exits 0 only when every check passed.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "nlslab/common.hpp"
#include "nlslab/io.hpp"
#include "nlslab/manifest.hpp"
#include "nlslab/scenarios.hpp"

namespace {

using nlslab::CheckResult;
using nlslab::RunOptions;

using ScenarioFn = std::vector<CheckResult> (*)(const RunOptions&);

/// Command registry: each CLI command maps to a list of uniquely named
/// scenarios run in order.
const std::map<std::string, std::vector<std::pair<std::string, ScenarioFn>>>& registry() {
  static const std::map<std::string, std::vector<std::pair<std::string, ScenarioFn>>> table = {
      {"conserve",
       {{"conservation", &nlslab::scenario_conservation},
        {"splitting_order", &nlslab::scenario_splitting_order}}},
      {"transform-id",
       {{"transform_identities", &nlslab::scenario_transform_identities},
        {"equation_equivalence", &nlslab::scenario_equation_equivalence}}},
      {"norms",
       {{"lp", &nlslab::scenario_lp},
        {"strichartz", &nlslab::scenario_strichartz},
        {"criticality", &nlslab::scenario_criticality},
        {"audits", &nlslab::scenario_audits}}},
      {"highlow",
       {{"pipeline", &nlslab::scenario_pipeline},
        {"increment", &nlslab::scenario_increment}}},
      {"lwp", {{"picard", &nlslab::scenario_picard}}},
      {"oracle", {{"oracle", &nlslab::scenario_oracle}}},
  };
  return table;
}

std::string usage_text() {
  return "usage: nlslab <command> [--manifest <path>] [--out <dir>] [--seed <u64>]\n"
         "              [--grid MxR] [--dt <f>] [--quiet]\n"
         "commands:\n"
         "  conserve      conservation drifts and the splitting-order study\n"
         "  transform-id  transform identities and the equation-equivalence residual\n"
         "  norms         dyadic decomposition, space-time ratios, criticality, audits\n"
         "  highlow       high/low pipeline and the energy-increment identity\n"
         "  lwp           Duhamel fixed-point (local well-posedness) study\n"
         "  oracle        independent-oracle cross checks\n"
         "manifest keys (flags take precedence): grid_m, grid_r, dt, seed, out,\n"
         "  quiet, delta0, t0, T0\n";
}

/// "MxR" -> grid with M subintervals and radius R, e.g. "2048x32".
nlslab::RadialGrid parse_grid(const std::string& spec) {
  const std::size_t xpos = spec.find('x');
  if (xpos == std::string::npos || xpos == 0 || xpos + 1 >= spec.size())
    throw nlslab::InputError("--grid expects MxR, e.g. 2048x32; got '" + spec + "'");
  std::size_t m = 0;
  double r = 0.0;
  try {
    std::size_t used = 0;
    m = std::stoull(spec.substr(0, xpos), &used);
    if (used != xpos) throw std::invalid_argument("trailing characters");
    const std::string rtext = spec.substr(xpos + 1);
    r = std::stod(rtext, &used);
    if (used != rtext.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw nlslab::InputError("--grid expects MxR, e.g. 2048x32; got '" + spec + "'");
  }
  return nlslab::RadialGrid(r, m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial defocusing NLS laboratory"};
  app.usage(usage_text());
  std::string command;
  std::string manifest_path;
  std::string out_dir;
  std::string grid_spec;
  std::optional<std::uint64_t> seed_flag;
  std::optional<double> dt_flag;
  bool quiet = false;
  app.add_option("command", command, "one of: conserve transform-id norms highlow lwp oracle")
      ->required();
  app.add_option("--manifest", manifest_path, "key = value run manifest");
  app.add_option("--out", out_dir, "artifact output directory");
  app.add_option("--seed", seed_flag, "corpus seed base (default 1)");
  app.add_option("--grid", grid_spec, "grid override, MxR (e.g. 2048x32)");
  app.add_option("--dt", dt_flag, "base time-step override");
  app.add_flag("--quiet", quiet, "suppress per-check output lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << usage_text();
    return 2;
  }

  const auto& table = registry();
  const auto entry = table.find(command);
  if (entry == table.end()) {
    std::cerr << "unknown command: " << command << "\n" << usage_text();
    return 2;
  }

  try {
    RunOptions opt;
    if (!manifest_path.empty()) {
      const nlslab::Manifest man = nlslab::Manifest::parse_file(manifest_path);
      if (man.has("grid_m") || man.has("grid_r"))
        opt.grid = nlslab::RadialGrid(man.get_double("grid_r", 32.0), man.get_u64("grid_m", 2048));
      if (man.has("dt")) opt.dt = man.get_double("dt", 0.0);
      if (man.has("delta0")) opt.delta0 = man.get_double("delta0", 0.0);
      if (man.has("t0")) opt.t0 = man.get_double("t0", 0.0);
      if (man.has("T0")) opt.T0 = man.get_double("T0", 0.0);
      opt.seed = man.get_u64("seed", opt.seed);
      opt.out_dir = man.get_string("out", opt.out_dir);
      opt.quiet = man.get_bool("quiet", opt.quiet);
    }
    if (!grid_spec.empty()) opt.grid = parse_grid(grid_spec);
    if (dt_flag) opt.dt = *dt_flag;
    if (seed_flag) opt.seed = *seed_flag;
    if (!out_dir.empty()) opt.out_dir = out_dir;
    if (quiet) opt.quiet = true;

    std::vector<CheckResult> all;
    for (const auto& [name, fn] : entry->second) {
      const std::vector<CheckResult> checks = fn(opt);
      all.insert(all.end(), checks.begin(), checks.end());
    }

    if (!opt.quiet) nlslab::print_checks(all, std::cout);
    if (!opt.out_dir.empty()) {
      std::filesystem::create_directories(opt.out_dir);
      nlslab::write_text_file(
          (std::filesystem::path(opt.out_dir) / "checks.json").string(),
          nlslab::checks_json(all));
    }

    if (nlslab::all_pass(all)) return 0;
    std::cerr << "failed checks:";
    for (const CheckResult& c : all)
      if (!c.pass) std::cerr << " " << c.name;
    std::cerr << "\n";
    return 1;
  } catch (const nlslab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n" << usage_text();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

/// \file acceptance.cpp
/// Acceptance runner: ten numbered criteria, each one scenario at its
/// documented desk-scale defaults. Prints exactly one summary line per
/// criterion ("ACCEPTANCE C<n> PASS|FAIL ..."); on failure the individual
/// failing checks follow, indented. Exit 0 iff every selected criterion
/// passed. Usage: acceptance [--criterion N].

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nlslab/io.hpp"
#include "nlslab/scenarios.hpp"

namespace {

using nlslab::CheckResult;
using nlslab::RunOptions;

struct Criterion {
  int id;
  const char* label;
  std::vector<CheckResult> (*run)(const RunOptions&);
};

const Criterion kCriteria[] = {
    {1, "conservation (mass / energy / P, Gaussian, t in [0,1])",
     &nlslab::scenario_conservation},
    {2, "Strang splitting order (Richardson ratio)", &nlslab::scenario_splitting_order},
    {3, "transform identities (involution / free flow / commutation)",
     &nlslab::scenario_transform_identities},
    {4, "equation equivalence under the transform (PDE residual)",
     &nlslab::scenario_equation_equivalence},
    {5, "dyadic reconstruction and square-function stability", &nlslab::scenario_lp},
    {6, "space-time ratio study (20 corpora, grid doubling)", &nlslab::scenario_strichartz},
    {7, "criticality anchors (exact)", &nlslab::scenario_criticality},
    {8, "high/low pipeline (split oracle, bootstrap flag)", &nlslab::scenario_pipeline},
    {9, "energy-increment identity (winning exponent)", &nlslab::scenario_increment},
    {10, "Duhamel fixed point (contraction, endpoint, T-scaling)",
     &nlslab::scenario_picard},
};

bool run_criterion(const Criterion& crit) {
  std::vector<CheckResult> checks;
  std::string error;
  try {
    RunOptions opt;
    checks = crit.run(opt);
  } catch (const std::exception& e) {
    error = e.what();
  }

  const bool ok = error.empty() && !checks.empty() && nlslab::all_pass(checks);
  std::ostringstream detail;
  if (!error.empty()) {
    detail << "exception: " << error;
  } else {
    int failed = 0;
    for (const CheckResult& c : checks)
      if (!c.pass) ++failed;
    detail << checks.size() - failed << "/" << checks.size() << " checks";
    // Name the headline quantities so the one-liner is self-contained.
    for (const CheckResult& c : checks) {
      detail << "  " << c.name.substr(c.name.find('.') + 1) << "="
             << nlslab::format_double(c.value);
    }
  }
  std::cout << "ACCEPTANCE C" << crit.id << " " << (ok ? "PASS" : "FAIL") << " " << crit.label
            << " [" << detail.str() << "]\n";
  if (!ok && !checks.empty()) nlslab::print_checks(checks, std::cout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected < 0 || selected > 10) {
    std::cerr << "usage: acceptance [--criterion N] with N in 1..10\n";
    return 2;
  }

  bool all_ok = true;
  for (const Criterion& crit : kCriteria) {
    if (selected != 0 && crit.id != selected) continue;
    all_ok = run_criterion(crit) && all_ok;
  }
  return all_ok ? 0 : 1;
}

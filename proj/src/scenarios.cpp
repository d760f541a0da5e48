#include "nlslab/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <utility>

#include "json.hpp"
#include "nlslab/corpus.hpp"
#include "nlslab/cutoffs.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/io.hpp"
#include "nlslab/lp.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"
#include "nlslab/solver.hpp"

namespace nlslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RadialGrid grid_or(const RunOptions& opt, const RadialGrid& fallback) {
  return opt.grid ? *opt.grid : fallback;
}

double dt_or(const RunOptions& opt, double fallback) { return opt.dt ? *opt.dt : fallback; }

CheckResult ceiling(std::string name, double value, double tol, std::string note = "") {
  return {std::move(name), value, tol, std::isfinite(value) && value <= tol, std::move(note)};
}

CheckResult window(std::string name, double value, double lo, double hi) {
  const bool ok = std::isfinite(value) && lo <= value && value <= hi;
  return {std::move(name), value, hi, ok,
          "window [" + format_double(lo) + ", " + format_double(hi) + "]"};
}

CheckResult exact(std::string name, double measured, double expected) {
  return {std::move(name), measured, expected, measured == expected,
          "exact equality against " + format_double(expected)};
}

CheckResult report_flag(std::string name, bool ok, double value, std::string note) {
  return {std::move(name), value, 0.0, ok, std::move(note)};
}

/// ||a - b||_L2 / ||b||_L2 (0/0 -> 0).
double rel_diff(const RadialField& a, const RadialField& b) {
  const double den = l2_norm(b);
  const double num = l2_norm(subtract(a, b));
  if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / den;
}

void emit(const RunOptions& opt, const std::string& name, const std::string& content) {
  if (opt.out_dir.empty()) return;
  std::filesystem::create_directories(opt.out_dir);
  write_text_file((std::filesystem::path(opt.out_dir) / name).string(), content);
}

/// Trace of the free flow of `u0` sampled on [0, t_end] every `step`.
SpaceTimeTrace free_trace(const RadialField& u0, double t_end, double step) {
  SpectralCoeffs c0 = dst_forward(u0);
  SpaceTimeTrace tr;
  tr.a = 0.0;
  tr.b = t_end;
  const int n = static_cast<int>(std::llround(t_end / step));
  for (int i = 0; i <= n; ++i) {
    const double t = step * static_cast<double>(i);
    tr.times.push_back(t);
    tr.fields.push_back(dst_inverse(free_propagate(c0, t)));
  }
  return tr;
}

double wall_seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

// ---------------------------------------------------------------------------
// Conservation (autonomous flow).
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_conservation(const RunOptions& opt) {
  const auto clock0 = std::chrono::steady_clock::now();
  SolverConfig cfg;
  cfg.grid = grid_or(opt, RadialGrid(32.0, 2048));
  cfg.dt = dt_or(opt, 1e-3);
  cfg.stride = 10;
  cfg.seed = opt.seed;

  const RadialField u0 = standard_gaussian(cfg.grid);
  const EvolveResult res = evolve(cfg, u0, Equation::Autonomous, 0.0, 1.0);

  auto drift = [&](auto getter) {
    const double base = getter(res.energy.rows.front());
    double worst = 0.0;
    for (const auto& row : res.energy.rows)
      worst = std::max(worst, std::abs(getter(row) - base) / std::abs(base));
    return worst;
  };
  const double mass_drift = drift([](const EnergyTrace::Row& r) { return r.mass; });
  const double energy_drift = drift([](const EnergyTrace::Row& r) { return r.energy; });
  const double p_drift = drift([](const EnergyTrace::Row& r) { return r.P; });

  emit(opt, "conserve_trace.csv", energy_trace_csv(res.energy));
  emit(opt, "conserve_summary.json", energy_trace_summary_json(res.energy));

  std::vector<CheckResult> checks;
  checks.push_back(ceiling("conserve.mass_drift", mass_drift, 1e-10, "relative, t in [0,1]"));
  checks.push_back(ceiling("conserve.energy_drift", energy_drift, 1e-6, "relative, t in [0,1]"));
  checks.push_back(ceiling("conserve.p_drift", p_drift, 1e-4,
                           "relative drift of P with the history term"));
  checks.push_back(ceiling("conserve.wall_seconds", wall_seconds_since(clock0), 30.0));
  return checks;
}

// ---------------------------------------------------------------------------
// Splitting order (Richardson ratio).
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_splitting_order(const RunOptions& opt) {
  SolverConfig cfg;
  cfg.grid = grid_or(opt, RadialGrid(32.0, 2048));
  cfg.stride = 1u << 30;  // keep only the endpoints
  const double dt_coarse = dt_or(opt, 2e-3);
  const double dt_half = dt_coarse / 2.0;
  const double dt_ref = dt_coarse / 80.0;
  const double t_end = 0.5;

  const RadialField u0 = standard_gaussian(cfg.grid);
  auto run = [&](double dt) {
    SolverConfig c = cfg;
    c.dt = dt;
    return evolve(c, u0, Equation::Autonomous, 0.0, t_end).final_field;
  };
  const RadialField ref = run(dt_ref);
  const double e_coarse = l2_norm(subtract(run(dt_coarse), ref));
  const double e_half = l2_norm(subtract(run(dt_half), ref));
  const double ratio = e_coarse / e_half;

  nlohmann::json j{{"dt_coarse", dt_coarse}, {"dt_half", dt_half},     {"dt_ref", dt_ref},
                   {"t_end", t_end},         {"error_coarse", e_coarse}, {"error_half", e_half},
                   {"ratio", ratio}};
  emit(opt, "order_study.json", j.dump(2) + "\n");

  std::vector<CheckResult> checks;
  checks.push_back(window("order.richardson_ratio", ratio, 3.2, 4.8));
  return checks;
}

// ---------------------------------------------------------------------------
// Transform identities.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_transform_identities(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  const RadialField g0 = standard_gaussian(grid);
  const double tol = 1e-3;
  std::vector<CheckResult> checks;
  nlohmann::json j;

  for (double t : {0.5, 2.0}) {
    // Involution: applying the transform at t and then at 1/t returns the field.
    const RadialField once = pseudo_conformal(g0, t).field;
    const RadialField twice = pseudo_conformal(once, 1.0 / t).field;
    const double inv = rel_diff(twice, g0);
    const std::string tname = format_double(t);
    checks.push_back(ceiling("transform.involution_t" + tname, inv, tol, "relative L2"));
    j["involution"][tname] = inv;

    // Transform of a free solution equals the free flow of the conjugate
    // Fourier final data.
    const RadialField lhs = pseudo_conformal(free_propagate(g0, 1.0 / t), t).field;
    const RadialField rhs = free_propagate(conj_fourier_final_data(g0), t);
    const double sf = rel_diff(lhs, rhs);
    checks.push_back(ceiling("transform.free_flow_t" + tname, sf, tol, "relative L2"));
    j["free_flow"][tname] = sf;

    // Commutation: |grad|^s applied after the transform equals the transform
    // of the weighted vector field |J(1/t)|^s.
    for (double s : {0.5, 1.0}) {
      const RadialField lcomm = apply_multiplier(
          pseudo_conformal(g0, t).field, [s](double k) { return cx(std::pow(k, s), 0.0); });
      const RadialField rcomm = pseudo_conformal(vector_field_J(g0, 1.0 / t, s), t).field;
      const double comm = rel_diff(lcomm, rcomm);
      const std::string name =
          "transform.commutation_s" + format_double(s) + "_t" + tname;
      checks.push_back(ceiling(name, comm, tol, "relative L2"));
      j["commutation"]["s" + format_double(s)][tname] = comm;
    }
  }

  emit(opt, "transform_identities.json", j.dump(2) + "\n");
  return checks;
}

// ---------------------------------------------------------------------------
// Equation equivalence under the transform.
// ---------------------------------------------------------------------------

namespace {

/// Residual of the nonautonomous equation evaluated on the transformed
/// trajectory at the requested times, with d/ds by centered differences of
/// half-width h. The underlying autonomous solve starts from the Gaussian
/// declared at t = 1/2 and visits the needed times in one chained run.
std::vector<double> equivalence_residuals(const RadialGrid& grid, const std::vector<double>& svals,
                                          double dt, double h) {
  std::vector<double> stops;
  for (double s : svals) {
    stops.push_back(1.0 / (s + h));
    stops.push_back(1.0 / s);
    stops.push_back(1.0 / (s - h));
  }
  std::sort(stops.begin(), stops.end());

  SolverConfig cfg;
  cfg.grid = grid;
  cfg.dt = dt;
  cfg.stride = 1u << 30;

  std::map<double, RadialField> u_at;
  RadialField cur = standard_gaussian(grid);
  double tcur = 0.5;
  for (double ts : stops) {
    cur = evolve(cfg, cur, Equation::Autonomous, tcur, ts).final_field;
    tcur = ts;
    u_at.emplace(ts, cur);
  }

  std::vector<double> residuals;
  for (double s : svals) {
    const RadialField up = pseudo_conformal(u_at.at(1.0 / (s + h)), s + h).field;
    const RadialField um = pseudo_conformal(u_at.at(1.0 / (s - h)), s - h).field;
    const RadialField uc = pseudo_conformal(u_at.at(1.0 / s), s).field;

    SpectralCoeffs bc = dst_forward(uc);
    for (std::size_t i = 0; i < bc.size(); ++i) {
      const double k = grid.k(i);
      bc.b[i] *= -0.5 * k * k;
    }
    const RadialField half_lap = dst_inverse(bc);

    RadialField res(grid);
    const double spow = 1.0 / std::sqrt(s);
    for (std::size_t i = 0; i < res.size(); ++i) {
      const cx ds = (up.g[i] - um.g[i]) / (2.0 * h);
      const cx nl = spow * std::abs(uc.f(i)) * uc.g[i];
      res.g[i] = cx(0.0, 1.0) * ds + half_lap.g[i] - nl;
    }
    residuals.push_back(l2_norm(res));
  }
  return residuals;
}

}  // namespace

std::vector<CheckResult> scenario_equation_equivalence(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  const double dt = dt_or(opt, 1e-3);
  const double h = 0.02;
  const std::vector<double> svals = {0.6, 1.0, 1.6};

  const std::vector<double> res = equivalence_residuals(grid, svals, dt, h);
  const std::vector<double> floor = equivalence_residuals(grid, svals, dt / 2.0, h / 2.0);

  nlohmann::json j;
  std::vector<CheckResult> checks;
  for (std::size_t i = 0; i < svals.size(); ++i) {
    const std::string sname = format_double(svals[i]);
    checks.push_back(ceiling("equiv.residual_s" + sname, res[i], 10.0 * floor[i],
                             "floor " + format_double(floor[i]) + " at (dt/2, h/2)"));
    j["s"].push_back(svals[i]);
    j["residual"].push_back(res[i]);
    j["floor"].push_back(floor[i]);
  }
  j["dt"] = dt;
  j["h"] = h;
  emit(opt, "equation_equivalence.json", j.dump(2) + "\n");
  return checks;
}

// ---------------------------------------------------------------------------
// Dyadic decomposition.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_lp(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  const RadialGrid grid2(grid.R, grid.M * 2);
  const DyadicLadder ladder = make_ladder(grid);

  double worst_recon = 0.0;
  for (int i = 0; i < 5; ++i) {
    const RadialField u = corpus(grid, opt.seed + static_cast<std::uint64_t>(i),
                                 CorpusKind::RandomBandlimited);
    RadialField recon(grid);
    for (int jj = ladder.j_full_lo; jj <= ladder.j_full_hi; ++jj)
      recon = add(recon, project_dyadic(u, ladder.frequency(jj)));
    worst_recon = std::max(worst_recon, rel_diff(recon, u));
  }

  double worst_drift = 0.0;
  nlohmann::json jratios;
  for (CorpusKind kind : {CorpusKind::RandomBandlimited, CorpusKind::GaussianMix}) {
    for (int i = 0; i < 3; ++i) {
      const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
      const double r1 = square_function_ratio(corpus(grid, seed, kind));
      const double r2 = square_function_ratio(corpus(grid2, seed, kind));
      worst_drift = std::max(worst_drift, std::abs(r2 / r1 - 1.0));
      jratios[to_string(kind)].push_back({{"seed", seed}, {"base", r1}, {"doubled", r2}});
    }
  }

  nlohmann::json j{{"reconstruction_max", worst_recon},
                   {"square_ratio_drift", worst_drift},
                   {"square_ratios", jratios}};
  emit(opt, "lp_report.json", j.dump(2) + "\n");

  std::vector<CheckResult> checks;
  checks.push_back(ceiling("lp.reconstruction_max", worst_recon, 1e-10,
                           "full-ladder telescoping on band-limited corpora"));
  checks.push_back(ceiling("lp.square_ratio_drift", worst_drift, 0.10,
                           "square-function L3 ratio under grid doubling"));
  return checks;
}

// ---------------------------------------------------------------------------
// Space-time ratio study.
// ---------------------------------------------------------------------------

namespace {

struct SpaceTimeMaxima {
  double q4r3 = 0.0;
  double q8r4 = 0.0;
  double q2rinf = 0.0;
  double smoothing = 0.0;
};

SpaceTimeMaxima space_time_maxima(const RadialGrid& grid, std::uint64_t seed0) {
  SpaceTimeMaxima m;
  for (int i = 0; i < 20; ++i) {
    const CorpusKind kind = (i % 3 == 0)   ? CorpusKind::GaussianMix
                            : (i % 3 == 1) ? CorpusKind::RandomBandlimited
                                           : CorpusKind::ShellBump;
    const RadialField u0 =
        corpus(grid, seed0 + static_cast<std::uint64_t>(i), kind, /*shell_j=*/2);
    const SpaceTimeTrace tr = free_trace(u0, 4.0, 0.05);
    const double l2n = l2_norm(u0);
    const double h12 = sobolev_norm(u0, 0.5);
    m.q4r3 = std::max(m.q4r3, strichartz_norm(tr, 4.0, 3.0) / l2n);
    m.q8r4 = std::max(m.q8r4, strichartz_norm(tr, 8.0, 4.0) / h12);
    m.q2rinf = std::max(m.q2rinf, strichartz_norm(tr, 2.0, kInf) / h12);
    m.smoothing = std::max(m.smoothing, local_smoothing_functional(tr, 0.5) / l2n);
  }
  return m;
}

}  // namespace

std::vector<CheckResult> scenario_strichartz(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  const RadialGrid grid2(grid.R, grid.M * 2);

  const SpaceTimeMaxima base = space_time_maxima(grid, opt.seed);
  const SpaceTimeMaxima dbl = space_time_maxima(grid2, opt.seed);

  // Declared proxy value, reported (never gated) alongside the ratio study.
  const SpaceTimeTrace tr0 =
      free_trace(corpus(grid, opt.seed, CorpusKind::GaussianMix), 4.0, 0.05);
  const double proxy = xs_proxy(tr0, 0.5);

  nlohmann::json j{{"base",
                    {{"q4_r3", base.q4r3},
                     {"q8_r4", base.q8r4},
                     {"q2_rinf", base.q2rinf},
                     {"smoothing", base.smoothing}}},
                   {"doubled",
                    {{"q4_r3", dbl.q4r3},
                     {"q8_r4", dbl.q8r4},
                     {"q2_rinf", dbl.q2rinf},
                     {"smoothing", dbl.smoothing}}},
                   {"xs_proxy_s0.5", proxy},
                   {"xs_proxy_label", "proxy"},
                   {"seeds", 20},
                   {"window", {0.0, 4.0}}};
  emit(opt, "strichartz_report.json", j.dump(2) + "\n");

  auto growth = [](double a, double b) { return b / a - 1.0; };
  std::vector<CheckResult> checks;
  checks.push_back(report_flag("strichartz.q4_r3_max", std::isfinite(base.q4r3), base.q4r3,
                               "max LHS/RHS over 20 corpora (vs L2)"));
  checks.push_back(report_flag("strichartz.q8_r4_max", std::isfinite(base.q8r4), base.q8r4,
                               "max LHS/RHS over 20 corpora (vs H^1/2)"));
  checks.push_back(report_flag("strichartz.q2_rinf_max", std::isfinite(base.q2rinf), base.q2rinf,
                               "max LHS/RHS over 20 corpora (vs H^1/2, radial endpoint)"));
  checks.push_back(report_flag("strichartz.smoothing_max", std::isfinite(base.smoothing),
                               base.smoothing, "local smoothing sigma=1/2 (vs L2)"));
  checks.push_back(
      ceiling("strichartz.q4_r3_growth", growth(base.q4r3, dbl.q4r3), 0.20, "grid doubling"));
  checks.push_back(
      ceiling("strichartz.q8_r4_growth", growth(base.q8r4, dbl.q8r4), 0.20, "grid doubling"));
  checks.push_back(ceiling("strichartz.q2_rinf_growth", growth(base.q2rinf, dbl.q2rinf), 0.20,
                           "grid doubling"));
  checks.push_back(ceiling("strichartz.smoothing_growth", growth(base.smoothing, dbl.smoothing),
                           0.20, "grid doubling"));
  return checks;
}

// ---------------------------------------------------------------------------
// Criticality anchors.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_criticality(const RunOptions& opt) {
  const Criticality c = criticality(3.0, 1.0);
  nlohmann::json j{{"s_c", c.s_c}, {"gamma", c.gamma}};
  emit(opt, "criticality.json", j.dump(2) + "\n");
  std::vector<CheckResult> checks;
  checks.push_back(exact("criticality.s_c", c.s_c, -0.5));
  checks.push_back(exact("criticality.gamma", c.gamma, 1.0));
  return checks;
}

// ---------------------------------------------------------------------------
// High/low pipeline.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_pipeline(const RunOptions& opt) {
  const auto clock0 = std::chrono::steady_clock::now();
  SolverConfig cfg;
  cfg.grid = grid_or(opt, RadialGrid(32.0, 2048));
  cfg.dt = dt_or(opt, 1e-3);
  cfg.stride = 50;
  cfg.seed = opt.seed;
  // Declared boundary tolerance for this window: free spreading out to T0 = 8
  // on R = 32 puts the far tail near 3e-4 of peak, which is benign at the
  // precision measured here; 1e-2 still flags any reflection pile-up.
  cfg.boundary_tol = 1e-2;

  const double delta0 = opt.delta0.value_or(1e-2);
  const double t0 = opt.t0.value_or(0.25);
  const double T0 = opt.T0.value_or(8.0);
  const RadialField u0 = standard_gaussian(cfg.grid);

  const PipelineReport rep = run_high_low_pipeline(u0, delta0, t0, T0, cfg);

  // Independent doubling-search oracle for the split radius.
  double oracle_n0 = 0.0;
  for (int jj = 1; std::ldexp(1.0, jj) <= cfg.grid.R / 4.0; ++jj) {
    const double n = std::ldexp(1.0, jj);
    if (weighted_norm(scale_cutoff_high(u0, n), 0.5) <= delta0) {
      oracle_n0 = n;
      break;
    }
  }

  double sup_cale = 0.0;
  bool all_finite = true;
  for (const auto& row : rep.energy.rows) {
    if (!std::isfinite(row.calE)) all_finite = false;
    sup_cale = std::max(sup_cale, row.calE);
  }

  emit(opt, "pipeline_report.json", pipeline_report_json(rep));
  emit(opt, "highlow_trace.csv", energy_trace_csv(rep.energy));
  if (!opt.out_dir.empty() && !rep.trace.fields.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    write_field_binary((std::filesystem::path(opt.out_dir) / "state_t0.rfld").string(),
                       rep.trace.fields.back());
  }

  std::vector<CheckResult> checks;
  checks.push_back(report_flag("pipeline.completed", !rep.energy.rows.empty(),
                               static_cast<double>(rep.energy.rows.size()),
                               "rows recorded over [t0, T0]"));
  checks.push_back(report_flag("pipeline.split_ok", rep.split.ok, rep.split.N0,
                               "tail norm " + format_double(rep.split.tail_norm)));
  checks.push_back(exact("pipeline.n0_matches_oracle", rep.split.N0, oracle_n0));
  checks.push_back(report_flag("pipeline.energy_finite", all_finite && std::isfinite(sup_cale),
                               sup_cale, "sup of the modified energy over the window"));
  checks.push_back(report_flag("pipeline.bootstrap_held", rep.bootstrap_held,
                               rep.bootstrap_margin,
                               std::string("sup calE <= 2 calE(T0): ") +
                                   (rep.bootstrap_held ? "held" : "violated") +
                                   ", margin reported as value"));
  checks.push_back(ceiling("pipeline.high_support_leak", rep.split.high_support_leak, 1e-2,
                           "max band-mass fraction of the high final data at N <= N0/8"));
  checks.push_back(report_flag("pipeline.duhamel_tail", std::isfinite(rep.duhamel_tail),
                               rep.duhamel_tail,
                               "final-data truncation proxy (one correction past T0)"));
  checks.push_back(report_flag("pipeline.truncation_ok", rep.truncation_ok,
                               rep.truncation_ok ? 1.0 : 0.0,
                               "boundary leakage stayed below the configured threshold"));
  checks.push_back(ceiling("pipeline.wall_seconds", wall_seconds_since(clock0), 120.0));
  return checks;
}

// ---------------------------------------------------------------------------
// Energy-increment identity.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_increment(const RunOptions& opt) {
  SolverConfig cfg;
  cfg.grid = grid_or(opt, RadialGrid(32.0, 1024));
  cfg.dt = dt_or(opt, 1e-3);
  cfg.stride = 4;
  cfg.seed = opt.seed;

  const double delta0 = opt.delta0.value_or(1e-2);
  const double t_final = 0.5;
  const double t_start = 4.0;

  const RadialField u0 = standard_gaussian(cfg.grid);
  DecompositionReport split = split_high_low(u0, delta0);
  const RadialField u_plus = add(split.v_plus, split.w_plus);
  const RadialField u_start = free_propagate(u_plus, t_start);

  auto run = [&](double dt) {
    SolverConfig c = cfg;
    c.dt = dt;
    const EvolveResult res =
        evolve(c, u_start, Equation::Nonautonomous, t_start, t_final, &split.v_plus);
    return energy_increment_check(res.trace);
  };
  const IncrementReport rep = run(cfg.dt);
  const IncrementReport fine = run(cfg.dt / 2.0);

  const double res_winner = std::min(rep.residual_minus, rep.residual_plus);
  const double res_loser = std::max(rep.residual_minus, rep.residual_plus);
  const double floor = 4.0 * std::min(fine.residual_minus, fine.residual_plus);

  std::string csv = "t,e_running\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i)
    csv += format_double(rep.times[i]) + "," + format_double(rep.e_running[i]) + "\n";
  emit(opt, "increment_e_running.csv", csv);
  nlohmann::json j{{"residual_minus", rep.residual_minus},
                   {"residual_plus", rep.residual_plus},
                   {"winner", rep.winner},
                   {"refined_residual_minus", fine.residual_minus},
                   {"refined_residual_plus", fine.residual_plus},
                   {"floor", floor},
                   {"dt", cfg.dt},
                   {"window", {t_final, t_start}}};
  emit(opt, "increment_report.json", j.dump(2) + "\n");

  std::vector<CheckResult> checks;
  checks.push_back(report_flag("increment.winner_recorded",
                               rep.winner == -0.5 || rep.winner == 0.5, rep.winner,
                               "exponent of t multiplying the gradient term"));
  checks.push_back(exact("increment.winner_stable", fine.winner, rep.winner));
  checks.push_back(ceiling("increment.residual_vs_floor", res_winner, 5.0 * floor,
                           "winning candidate against 5x the refinement floor"));
  checks.push_back(report_flag("increment.loser_above_floor", res_loser > 5.0 * floor, res_loser,
                               "losing candidate must not also fit"));
  return checks;
}

// ---------------------------------------------------------------------------
// Duhamel fixed point.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_picard(const RunOptions& opt) {
  SolverConfig cfg;
  cfg.grid = grid_or(opt, RadialGrid(32.0, 512));
  cfg.dt = dt_or(opt, 1e-3);
  cfg.seed = opt.seed;

  const double t0 = 1.0;
  const double s = 0.5;
  const double T = 0.25;
  const RadialField data = standard_gaussian(cfg.grid, 0.5);

  const PicardReport rep = picard_lwp(data, t0, s, T, cfg);
  const PicardReport rep_half = picard_lwp(data, t0, s, T / 2.0, cfg);

  // Independent endpoint oracle: step the autonomous equation to t0 + T.
  SolverConfig ref_cfg = cfg;
  ref_cfg.dt = 2.5e-4;
  ref_cfg.stride = 1u << 30;
  const RadialField ref =
      evolve(ref_cfg, data, Equation::Autonomous, t0, t0 + T).final_field;
  const double endpoint_err = l2_norm(subtract(rep.final_nodes.back(), ref));

  const double kappa_ratio = rep.kappa / rep_half.kappa;
  const double target = std::pow(2.0, (1.0 + 2.0 * s) / 4.0);

  nlohmann::json j{{"T_main", nlohmann::json::parse(picard_report_json(rep))},
                   {"T_half", nlohmann::json::parse(picard_report_json(rep_half))},
                   {"endpoint_error", endpoint_err},
                   {"kappa_ratio", kappa_ratio},
                   {"kappa_target", target}};
  emit(opt, "picard_report.json", j.dump(2) + "\n");

  std::vector<CheckResult> checks;
  checks.push_back(report_flag("picard.contracted", rep.contracted,
                               rep.ratios.empty() ? 0.0 : rep.ratios.front(),
                               "all successive-difference ratios < 1 (first ratio as value)"));
  checks.push_back(report_flag("picard.ratios_decreasing", rep.ratios_decreasing, rep.slope,
                               "least-squares slope of log ratios (negative = decreasing)"));
  checks.push_back(report_flag("picard.not_diverged", !rep.diverged, rep.measured_R,
                               "measured resolution bound as value"));
  checks.push_back(report_flag("picard.contracted_half_T", rep_half.contracted,
                               rep_half.ratios.empty() ? 0.0 : rep_half.ratios.front(),
                               "contraction also at T/2 (used by the scaling check)"));
  checks.push_back(ceiling("picard.endpoint_agreement", endpoint_err, 1e-4,
                           "L2 against the stepped solver at t0 + T"));
  checks.push_back(window("picard.kappa_scaling", kappa_ratio, 0.7 * target, 1.3 * target));
  return checks;
}

// ---------------------------------------------------------------------------
// Inequality audits and space-time consistency checks.
// ---------------------------------------------------------------------------

namespace {

nlohmann::json audit_json(const AuditReport& rep) {
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [key, val] : rep.params) p[key] = val;
  return {{"name", rep.name}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"ratio", rep.ratio},
          {"params", p}};
}

}  // namespace

std::vector<CheckResult> scenario_audits(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  const RadialField u = standard_gaussian(grid);
  std::vector<CheckResult> checks;
  nlohmann::json j;

  const AuditReport hardy = audit_hardy(u, 2.0);
  checks.push_back(ceiling("audit.hardy_ratio", hardy.ratio, 2.0,
                           "p = 2; the classical constant for this p is 2"));
  j["audits"].push_back(audit_json(hardy));

  const AuditReport gn = audit_gagliardo_nirenberg(u, 0.5, 1.0, 2.0, 2.0, 2.0, 0.5);
  checks.push_back(ceiling("audit.interpolation_ratio", gn.ratio, 1.0 + 1e-12,
                           "L2-scale interpolation is a Cauchy-Schwarz bound"));
  j["audits"].push_back(audit_json(gn));

  const AuditReport gni = audit_gagliardo_nirenberg(u, 1.0, 1.0, 2.0, 2.0, 2.0, 1.0);
  checks.push_back(ceiling("audit.interpolation_identity", std::abs(gni.ratio - 1.0), 1e-12,
                           "theta = 1 degenerates to an identity"));
  j["audits"].push_back(audit_json(gni));

  const AuditReport rs = audit_radial_sobolev(u, 0.5, 2.0, 2.0, 0.0, -0.5);
  checks.push_back(ceiling("audit.radial_sobolev_ratio", rs.ratio, 2.0,
                           "half-derivative weighted embedding at the L2 line"));
  j["audits"].push_back(audit_json(rs));

  std::mt19937_64 rng(opt.seed);
  auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> a_seq(16), b_seq(16);
  for (std::size_t i = 0; i < a_seq.size(); ++i) {
    a_seq[i] = 0.1 + u01();
    b_seq[i] = 0.1 + u01();
  }
  const AuditReport schur = audit_schur(a_seq, b_seq, 0.5);
  const double schur_bound = 1.0 / (1.0 - std::pow(2.0, -0.5));
  checks.push_back(ceiling("audit.schur_ratio", schur.ratio, schur_bound,
                           "geometric-series Schur bound for a = 1/2"));
  j["audits"].push_back(audit_json(schur));

  // Lorentz realization vs the plain Lebesgue time norm at p = q.
  const SpaceTimeTrace tr = free_trace(u, 4.0, 0.05);
  const double lor = lorentz_time_norm(tr, 4.0, 4.0, 3.0);
  const double str = strichartz_norm(tr, 4.0, 3.0);
  const double lor_ratio = std::max(lor / str, str / lor);
  checks.push_back(ceiling("audit.lorentz_vs_lebesgue", lor_ratio, 2.0,
                           "dyadic-shell realization within 2x at p = q"));
  j["lorentz"] = {{"lorentz", lor}, {"lebesgue", str}};

  // Transform-weight identity: the time-inverted trajectory's (q, r) norm
  // equals the weighted (q, r) norm of the original, weight t^{(3/2-3/r)-2/q}.
  const SpectralCoeffs c0 = dst_forward(u);
  std::vector<double> snodes;
  for (int i = 0; i <= 30; ++i) snodes.push_back(0.5 + 0.05 * static_cast<double>(i));
  SpaceTimeTrace tr_u;  // original trajectory at times 1/s, ascending
  for (auto it = snodes.rbegin(); it != snodes.rend(); ++it)
    tr_u.times.push_back(1.0 / *it);
  tr_u.a = tr_u.times.front();
  tr_u.b = tr_u.times.back();
  for (double sig : tr_u.times) tr_u.fields.push_back(dst_inverse(free_propagate(c0, sig)));
  SpaceTimeTrace tr_T;  // transformed trajectory at times s
  tr_T.times = snodes;
  tr_T.a = snodes.front();
  tr_T.b = snodes.back();
  for (double sv : snodes)
    tr_T.fields.push_back(pseudo_conformal(dst_inverse(free_propagate(c0, 1.0 / sv)), sv).field);

  for (auto [q, r] : {std::pair<double, double>{4.0, 3.0}, std::pair<double, double>{8.0, 4.0}}) {
    const double wexp = (1.5 - 3.0 / r) - 2.0 / q;
    const double lhs = strichartz_norm(tr_T, q, r);
    const double rhs =
        strichartz_norm(tr_u, q, r, [wexp](double t) { return std::pow(t, wexp); });
    const double dev = std::abs(lhs / rhs - 1.0);
    const std::string name =
        "audit.transform_weight_q" + format_double(q) + "_r" + format_double(r);
    checks.push_back(ceiling(name, dev, 1e-2, "weight exponent " + format_double(wexp)));
    j["transform_weight"]["q" + format_double(q) + "_r" + format_double(r)] = {
        {"transformed", lhs}, {"weighted_original", rhs}};
  }

  emit(opt, "audits.json", j.dump(2) + "\n");
  return checks;
}

// ---------------------------------------------------------------------------
// Oracle wiring.
// ---------------------------------------------------------------------------

std::vector<CheckResult> scenario_oracle(const RunOptions& opt) {
  const RadialGrid grid = grid_or(opt, RadialGrid(32.0, 2048));
  std::vector<CheckResult> checks;
  nlohmann::json j;

  const RadialField mix = corpus(grid, opt.seed, CorpusKind::GaussianMix);
  for (double t : {0.5, 1.0}) {
    const double dev = rel_diff(free_propagate(mix, t), kernel_propagate(mix, t));
    const std::string name = "oracle.kernel_vs_spectral_t" + format_double(t);
    checks.push_back(ceiling(name, dev, 1e-6, "quadrature kernel oracle, relative L2"));
    j["kernel_vs_spectral"][format_double(t)] = dev;
  }

  const RadialField gauss = standard_gaussian(grid);
  const double fix = rel_diff(conj_fourier_final_data(gauss), gauss);
  checks.push_back(ceiling("oracle.fourier_gaussian_fixed_point", fix, 1e-8,
                           "exp(-r^2/2) is self-dual and real"));
  j["fourier_gaussian_fixed_point"] = fix;

  const RadialField band = corpus(grid, opt.seed + 1, CorpusKind::RandomBandlimited);
  const double roundtrip = rel_diff(dst_inverse(dst_forward(band)), band);
  checks.push_back(ceiling("oracle.roundtrip", roundtrip, 1e-12, "inverse of forward"));
  j["roundtrip"] = roundtrip;

  const SpectralCoeffs bb = dst_forward(band);
  double spec_sq = 0.0;
  for (const cx& v : bb.b) spec_sq += std::norm(v);
  spec_sq *= 2.0 * kPi * grid.R;
  const double phys_sq = mass(band);
  const double parseval = std::abs(spec_sq - phys_sq) / phys_sq;
  checks.push_back(ceiling("oracle.parseval", parseval, 1e-12, "relative defect"));
  j["parseval"] = parseval;

  const double unit =
      std::abs(l2_norm(free_propagate(band, 0.7)) - l2_norm(band)) / l2_norm(band);
  checks.push_back(ceiling("oracle.unitarity", unit, 1e-12, "free flow preserves L2"));
  j["unitarity"] = unit;

  const double group =
      rel_diff(free_propagate(free_propagate(band, 0.3), 0.4), free_propagate(band, 0.7));
  checks.push_back(ceiling("oracle.group_law", group, 1e-12, "S(0.3)S(0.4) = S(0.7)"));
  j["group_law"] = group;

  emit(opt, "oracle_report.json", j.dump(2) + "\n");
  return checks;
}

// ---------------------------------------------------------------------------
// Shared output helpers.
// ---------------------------------------------------------------------------

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string checks_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& c : checks)
    arr.push_back({{"name", c.name},
                   {"value", c.value},
                   {"tol", c.tol},
                   {"pass", c.pass},
                   {"note", c.note}});
  return arr.dump(2) + "\n";
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& os) {
  for (const CheckResult& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value)
       << " tol=" << format_double(c.tol);
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
}

}  // namespace nlslab

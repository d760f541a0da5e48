#include "nlslab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "json.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"

namespace nlslab {

namespace {

void check_finite_or_throw(const RadialField& u, double t) {
  for (const cx& v : u.g)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error("evolve: step failure at t = " + std::to_string(t) +
                  ": non-finite field (overflow)");
}

/// Exact-phase nonlinear substep: multiply each sample by e^{-i |f| w}, where
/// |f| = |g|/r is invariant under the substep and w is the integrated
/// coefficient over the step.
void nonlinear_phase(RadialField& u, double w) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double amp = std::abs(u.g[i]) / u.grid.r(i);
    u.g[i] *= std::polar(1.0, -amp * w);
  }
}

double cube(double x) { return x * x * x; }

/// || |u| u ||_{L^2} = sqrt(4 pi dr sum |g|^4 / r^2).
double nonlinearity_l2(const RadialField& u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a2 = std::norm(u.g[i]);
    acc += a2 * a2 / (u.grid.r(i) * u.grid.r(i));
  }
  return std::sqrt(4.0 * kPi * u.grid.dr() * acc);
}

/// The time partition for a span [a, b] under the configured schedule.
std::vector<double> make_partition(const SolverConfig& config, Equation eq, double a, double b) {
  std::vector<double> ts;
  if (config.schedule == StepSchedule::Uniform) {
    const auto n = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(std::abs(b - a) / config.dt)));
    const double h = (b - a) / static_cast<double>(n);
    ts.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) ts.push_back(a + static_cast<double>(i) * h);
    ts.push_back(b);
    return ts;
  }
  // Geometric: |step| = dt * t / max(a, b), refining toward t = 0.
  if (eq != Equation::Nonautonomous)
    throw InputError("evolve: the geometric step schedule applies to the nonautonomous "
                     "equation only");
  const double t_far = std::max(a, b);
  const double dir = (b > a) ? 1.0 : -1.0;
  double t = a;
  ts.push_back(t);
  while ((b - t) * dir > 0.0) {
    const double h = config.dt * t / t_far;
    double next = t + dir * h;
    if ((b - next) * dir <= 0.0) next = b;
    ts.push_back(next);
    t = next;
  }
  return ts;
}

}  // namespace

RadialField step_autonomous(const RadialField& u, double dt, bool nonlinear_enabled) {
  RadialField v = free_propagate(u, dt / 2.0);
  if (nonlinear_enabled) nonlinear_phase(v, dt);
  return free_propagate(v, dt / 2.0);
}

RadialField step_nonautonomous(const RadialField& u, double t, double dt,
                               bool nonlinear_enabled) {
  if (!(t > 0.0) || !(t + dt > 0.0))
    throw InputError("step_nonautonomous: window crossing t = 0 (t = " + std::to_string(t) +
                     ", dt = " + std::to_string(dt) + ")");
  RadialField v = free_propagate(u, dt / 2.0);
  if (nonlinear_enabled) nonlinear_phase(v, 2.0 * (std::sqrt(t + dt) - std::sqrt(t)));
  return free_propagate(v, dt / 2.0);
}

EvolveResult evolve(const SolverConfig& config, const RadialField& initial, Equation eq,
                    double t_begin, double t_end, const RadialField* v_plus, WarningSink sink) {
  if (!(initial.grid == config.grid))
    throw InputError("evolve: field grid differs from config grid");
  if (!(config.dt > 0.0)) throw InputError("evolve: dt must be positive");
  if (config.stride < 1) throw InputError("evolve: stride must be >= 1");
  if (t_begin == t_end) throw InputError("evolve: zero-length span");
  if (eq == Equation::Nonautonomous && (!(t_begin > 0.0) || !(t_end > 0.0)))
    throw InputError("evolve: nonautonomous span must stay within t > 0");
  if (v_plus != nullptr && !(v_plus->grid == config.grid))
    throw InputError("evolve: linear-part grid differs from config grid");

  const std::vector<double> ts = make_partition(config, eq, t_begin, t_end);

  EvolveResult out;
  out.trace.a = std::min(t_begin, t_end);
  out.trace.b = std::max(t_begin, t_end);
  out.trace.stride = config.stride;
  PHistory& hist = out.energy.history;

  SpectralCoeffs cv;
  if (v_plus != nullptr) cv = dst_forward(*v_plus);

  RadialField u = initial;
  double max_leak = 0.0;

  const auto record = [&](const RadialField& field, double t) {
    RadialField w = field;
    if (v_plus != nullptr) w = subtract(field, dst_inverse(free_propagate(cv, t)));
    EnergyTrace::Row row;
    row.t = t;
    row.mass = mass(field);
    row.energy = energy(field, 1.0);
    row.P = pseudo_conformal_P(field, t, hist);
    row.calE = (t > 0.0) ? modified_energy(w, t) : 0.0;
    row.h1_W = sobolev_norm(w, 1.0);
    row.l3_W = lebesgue_norm(w, 3.0);
    row.h12_W = sobolev_norm(w, 0.5);
    out.energy.rows.push_back(row);
    out.trace.times.push_back(t);
    out.trace.fields.push_back(field);
    if (v_plus != nullptr) out.trace.aux.push_back(std::move(w));
    max_leak = std::max(max_leak, boundary_leakage(field));
  };

  hist.accumulate(ts.front(), ts.front() * cube(lebesgue_norm(u, 3.0)));
  record(u, ts.front());

  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double t_prev = ts[i - 1];
    const double h = ts[i] - t_prev;
    u = (eq == Equation::Autonomous)
            ? step_autonomous(u, h, config.nonlinear_enabled)
            : step_nonautonomous(u, t_prev, h, config.nonlinear_enabled);
    check_finite_or_throw(u, ts[i]);
    hist.accumulate(ts[i], ts[i] * cube(lebesgue_norm(u, 3.0)));
    if (i % config.stride == 0 || i + 1 == ts.size()) record(u, ts[i]);
  }

  if (max_leak > config.boundary_tol)
    warn(sink, "evolve: boundary leakage " + std::to_string(max_leak) +
                   " exceeded the threshold " + std::to_string(config.boundary_tol) +
                   "; the domain truncation is biting");
  out.final_field = std::move(u);
  return out;
}

IncrementReport energy_increment_check(const SpaceTimeTrace& trace) {
  if (!trace.has_aux())
    throw InputError("energy_increment_check: the trace did not store the linear-part "
                     "difference snapshots");
  if (trace.size() < 3)
    throw InputError("energy_increment_check: need at least 3 stored snapshots");
  for (double t : trace.times)
    if (!(t > 0.0))
      throw InputError("energy_increment_check: requires a positive-time trajectory");

  const std::size_t n = trace.size();
  const RadialGrid& gr = trace.fields.front().grid;

  std::vector<double> calE(n), first_term(n), grad_sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = trace.times[i];
    const RadialField& U = trace.fields[i];
    const RadialField& W = trace.aux[i];
    calE[i] = modified_energy(W, t);

    const SpectralCoeffs bw = dst_forward(W);
    SpectralCoeffs lap = bw;
    for (std::size_t m = 0; m < lap.size(); ++m) lap.b[m] *= -gr.k(m) * gr.k(m);
    const RadialField lap_w = dst_inverse(lap);

    const double coeff = 1.0 / std::sqrt(t);
    double acc = 0.0, gsq = 0.0;
    for (std::size_t m = 0; m < gr.nodes(); ++m) {
      const double r = gr.r(m);
      const cx wt = cx(0.0, 1.0) * (0.5 * lap_w.g[m] - coeff * (std::abs(U.g[m]) / r) * U.g[m]);
      const cx mix = std::abs(U.g[m]) * U.g[m] - std::abs(W.g[m]) * W.g[m];
      acc += (mix * std::conj(wt)).real() / r;
      gsq += gr.k(m) * gr.k(m) * std::norm(bw.b[m]);
    }
    first_term[i] = 4.0 * kPi * gr.dr() * acc;
    grad_sq[i] = 2.0 * kPi * gr.R * gsq;
  }

  IncrementReport rep;
  double e_acc = 0.0, prev_t = trace.times.front(), prev_first = first_term.front();
  double sm = 0.0, sp = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double t = trace.times[i];
    const double fd = (calE[i + 1] - calE[i - 1]) / (trace.times[i + 1] - trace.times[i - 1]);
    const double cm = first_term[i] + 0.125 * grad_sq[i] / std::sqrt(t);
    const double cp = first_term[i] + 0.125 * grad_sq[i] * std::sqrt(t);
    sm += (fd - cm) * (fd - cm);
    sp += (fd - cp) * (fd - cp);
    e_acc += 0.5 * (t - prev_t) * (first_term[i] + prev_first);
    prev_t = t;
    prev_first = first_term[i];
    rep.times.push_back(t);
    rep.e_running.push_back(e_acc);
  }
  const auto m = static_cast<double>(n - 2);
  rep.residual_minus = std::sqrt(sm / m);
  rep.residual_plus = std::sqrt(sp / m);
  rep.winner = (rep.residual_minus <= rep.residual_plus) ? -0.5 : 0.5;
  return rep;
}

PipelineReport run_high_low_pipeline(const RadialField& u0, double delta0, double t0, double T0,
                                     const SolverConfig& config) {
  if (!(0.0 < t0 && t0 < T0))
    throw InputError("run_high_low_pipeline: requires 0 < t0 < T0");
  if (!(u0.grid == config.grid))
    throw InputError("run_high_low_pipeline: field grid differs from config grid");

  PipelineReport rep;
  rep.split = split_high_low(u0, delta0);
  rep.warnings = rep.split.warnings;

  // Final-data approximation U(T0) = S(T0)(v_plus + w_plus); using the split
  // pair keeps W(T0) = S(T0) w_plus exact.
  const RadialField u_plus = add(rep.split.v_plus, rep.split.w_plus);
  const RadialField u_T0 = free_propagate(u_plus, T0);

  std::vector<std::string> run_warnings;
  EvolveResult ev = evolve(config, u_T0, Equation::Nonautonomous, T0, t0, &rep.split.v_plus,
                           &run_warnings);
  rep.warnings.insert(rep.warnings.end(), run_warnings.begin(), run_warnings.end());
  rep.energy = std::move(ev.energy);
  rep.trace = std::move(ev.trace);

  rep.calE_T0 = rep.energy.rows.front().calE;
  bool finite = true;
  for (const auto& row : rep.energy.rows) {
    if (!std::isfinite(row.calE)) finite = false;
    rep.sup_calE = std::max(rep.sup_calE, row.calE);
  }
  if (!finite) rep.warnings.push_back("modified energy became non-finite along the run");
  rep.bootstrap_held = finite && rep.sup_calE <= 2.0 * rep.calE_T0;
  rep.bootstrap_margin = 2.0 * rep.calE_T0 - rep.sup_calE;
  rep.A = (rep.split.N0 > 0.0) ? rep.calE_T0 / rep.split.N0 : 0.0;

  double max_leak = 0.0;
  for (const RadialField& f : rep.trace.fields)
    max_leak = std::max(max_leak, boundary_leakage(f));
  rep.truncation_ok = max_leak <= config.boundary_tol;
  if (!rep.truncation_ok)
    rep.warnings.push_back("partial report: boundary leakage " + std::to_string(max_leak) +
                           " above threshold " + std::to_string(config.boundary_tol) +
                           " when t0 was reached");

  // Tail proxy: one Picard correction of the free extension beyond T0,
  // quadrature on 33 geometric nodes spanning [T0, 8 T0].
  const SpectralCoeffs cu = dst_forward(u_plus);
  std::vector<double> taus(33), vals(33);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    taus[i] = T0 * std::pow(8.0, static_cast<double>(i) / 32.0);
    const RadialField uf = dst_inverse(free_propagate(cu, taus[i]));
    vals[i] = nonlinearity_l2(uf) / std::sqrt(taus[i]);
  }
  for (std::size_t i = 1; i < taus.size(); ++i)
    rep.duhamel_tail += 0.5 * (taus[i] - taus[i - 1]) * (vals[i] + vals[i - 1]);

  return rep;
}

std::string pipeline_report_json(const PipelineReport& rep) {
  nlohmann::json j;
  j["split"] = nlohmann::json::parse(decomposition_report_json(rep.split));
  j["calE_T0"] = rep.calE_T0;
  j["sup_calE"] = rep.sup_calE;
  j["bootstrap_held"] = rep.bootstrap_held;
  j["bootstrap_margin"] = rep.bootstrap_margin;
  j["A"] = rep.A;
  j["truncation_ok"] = rep.truncation_ok;
  j["duhamel_tail"] = rep.duhamel_tail;
  j["rows"] = rep.energy.rows.size();
  j["warnings"] = rep.warnings;
  return j.dump(2);
}

PicardReport picard_lwp(const RadialField& u_t0, double t0, double s, double T,
                        const SolverConfig& config, int n_iter, std::size_t n_nodes) {
  if (!(u_t0.grid == config.grid))
    throw InputError("picard_lwp: field grid differs from config grid");
  if (t0 == 0.0) throw InputError("picard_lwp: requires t0 != 0");
  if (!(T > 0.0) || !(T < std::abs(t0)))
    throw InputError("picard_lwp: requires 0 < T < |t0|");
  if (!(s >= 0.0 && s <= 1.0)) throw InputError("picard_lwp: requires s in [0, 1]");
  if (n_nodes < 3 || n_nodes % 2 == 0)
    throw InputError("picard_lwp: n_nodes must be odd and >= 3");
  if (n_iter < 1) throw InputError("picard_lwp: n_iter must be >= 1");

  const RadialGrid& gr = u_t0.grid;
  const std::size_t L = gr.nodes();
  const std::size_t i0 = n_nodes / 2;

  std::vector<double> taus(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i)
    taus[i] = t0 - T + 2.0 * T * static_cast<double>(i) / static_cast<double>(n_nodes - 1);
  taus[i0] = t0;

  // Interaction picture: v(t) = e^{+i k^2 t / 2} u_hat(t) is constant for the
  // free flow, so the iteration updates only the Duhamel correction.
  const SpectralCoeffs b_dat = dst_forward(u_t0);
  std::vector<cx> vconst(L);
  for (std::size_t m = 0; m < L; ++m)
    vconst[m] = b_dat.b[m] * std::polar(1.0, 0.5 * gr.k(m) * gr.k(m) * t0);

  const auto u_of = [&](const std::vector<cx>& v, double tau) {
    SpectralCoeffs c(gr);
    for (std::size_t m = 0; m < L; ++m)
      c.b[m] = v[m] * std::polar(1.0, -0.5 * gr.k(m) * gr.k(m) * tau);
    return dst_inverse(c);
  };
  // |J(t)|^s u without the outer modulation: same L^2 size as |J(t)|^s u and
  // the declared L^3 proxy for the iteration's space-time norms.
  const auto j_field = [&](const RadialField& f, double t) {
    SpectralCoeffs b = dst_forward(modulate(f, t, -1));
    for (std::size_t m = 0; m < L; ++m) b.b[m] *= std::pow(std::abs(t) * gr.k(m), s);
    return dst_inverse(b);
  };
  const auto l4l3 = [&](const std::vector<RadialField>& fs) {
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const double v3 = lebesgue_norm(j_field(fs[i], taus[i]), 3.0);
      const double v4 = v3 * v3 * v3 * v3;
      if (i > 0) acc += 0.5 * (taus[i] - taus[i - 1]) * (v4 + prev);
      prev = v4;
    }
    return std::pow(acc, 0.25);
  };

  std::vector<std::vector<cx>> vk(n_nodes, vconst);
  std::vector<RadialField> prev_u(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) prev_u[i] = u_of(vk[i], taus[i]);

  PicardReport rep;
  rep.nodes = n_nodes;
  rep.node_times = taus;
  std::vector<RadialField> u0_nodes, u1_nodes, diff0;

  for (int it = 0; it < n_iter; ++it) {
    // N_i = e^{+i k^2 tau_i / 2} * dst(|u| u) at each node.
    std::vector<std::vector<cx>> nv(n_nodes, std::vector<cx>(L));
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const RadialField u = u_of(vk[i], taus[i]);
      RadialField nl(gr);
      for (std::size_t m = 0; m < L; ++m) nl.g[m] = (std::abs(u.g[m]) / gr.r(m)) * u.g[m];
      const SpectralCoeffs bn = dst_forward(nl);
      for (std::size_t m = 0; m < L; ++m)
        nv[i][m] = bn.b[m] * std::polar(1.0, 0.5 * gr.k(m) * gr.k(m) * taus[i]);
    }
    // Cumulative trapezoid outward from the center node t0.
    std::vector<std::vector<cx>> newv(n_nodes, vconst);
    std::vector<cx> acc(L, cx(0.0));
    for (std::size_t i = i0 + 1; i < n_nodes; ++i) {
      const double h = taus[i] - taus[i - 1];
      for (std::size_t m = 0; m < L; ++m) {
        acc[m] += 0.5 * h * (nv[i - 1][m] + nv[i][m]);
        newv[i][m] = vconst[m] - cx(0.0, 1.0) * acc[m];
      }
    }
    std::fill(acc.begin(), acc.end(), cx(0.0));
    for (std::size_t ii = i0; ii-- > 0;) {
      const double h = taus[ii] - taus[ii + 1];
      for (std::size_t m = 0; m < L; ++m) {
        acc[m] += 0.5 * h * (nv[ii + 1][m] + nv[ii][m]);
        newv[ii][m] = vconst[m] - cx(0.0, 1.0) * acc[m];
      }
    }

    std::vector<RadialField> new_u(n_nodes), diffs(n_nodes);
    double d = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
      new_u[i] = u_of(newv[i], taus[i]);
      diffs[i] = subtract(new_u[i], prev_u[i]);
      d = std::max(d, l2_norm(j_field(diffs[i], taus[i])));
    }
    rep.d.push_back(d);
    if (it == 0) {
      u0_nodes = prev_u;
      diff0 = diffs;
    } else if (it == 1) {
      u1_nodes = prev_u;
      const double u0n = l4l3(u0_nodes);
      const double u1n = l4l3(u1_nodes);
      const double dn = l4l3(diff0);
      const double denom = (u0n + u1n) * dn;
      rep.kappa = (denom > 0.0) ? rep.d[1] / denom : 0.0;
    }
    prev_u = std::move(new_u);
    vk = std::move(newv);
    rep.iterations = it + 1;
    if (d == 0.0) break;  // fixed point reached exactly
  }

  for (std::size_t k = 0; k + 1 < rep.d.size(); ++k) {
    if (rep.d[k] == 0.0) break;
    rep.ratios.push_back(rep.d[k + 1] / rep.d[k]);
  }
  rep.contracted = !rep.d.empty();
  for (double r : rep.ratios)
    if (!(r < 1.0)) rep.contracted = false;

  if (rep.ratios.size() >= 2) {
    // Least-squares slope of log(ratio_k) against k.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto nr = static_cast<double>(rep.ratios.size());
    for (std::size_t k = 0; k < rep.ratios.size(); ++k) {
      const double x = static_cast<double>(k);
      const double y = std::log(rep.ratios[k]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.slope = (nr * sxy - sx * sy) / (nr * sxx - sx * sx);
  }
  rep.ratios_decreasing = rep.contracted && rep.slope < 0.0;

  int run = 0;
  for (double r : rep.ratios) {
    run = (r >= 1.0) ? run + 1 : 0;
    if (run >= 3) rep.diverged = true;
  }

  for (std::size_t i = 0; i < n_nodes; ++i)
    rep.measured_R = std::max(rep.measured_R, l2_norm(j_field(prev_u[i], taus[i])));
  rep.final_center = prev_u[i0];
  rep.final_nodes = std::move(prev_u);
  return rep;
}

std::string picard_report_json(const PicardReport& rep) {
  nlohmann::json j;
  j["d"] = rep.d;
  j["ratios"] = rep.ratios;
  j["contracted"] = rep.contracted;
  j["ratios_decreasing"] = rep.ratios_decreasing;
  j["diverged"] = rep.diverged;
  j["slope"] = rep.slope;
  j["kappa"] = rep.kappa;
  j["measured_R"] = rep.measured_R;
  j["nodes"] = rep.nodes;
  j["iterations"] = rep.iterations;
  return j.dump(2);
}

}  // namespace nlslab

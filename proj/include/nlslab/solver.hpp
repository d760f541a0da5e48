#pragma once
/// \file solver.hpp
/// Split-step spectral integration of the two model equations
///   (A)  i u_t + (1/2) Delta u = |u| u                 (autonomous)
///   (B)  i U_t + (1/2) Delta U = t^{-1/2} |U| U        (nonautonomous, t > 0)
/// forward and backward in time, plus the three experiments built on top of
/// the integrator: the energy-increment identity check, the high/low data
/// pipeline, and the Duhamel fixed-point (Picard) iteration.

#include <cstdint>
#include <string>
#include <vector>

#include "nlslab/grid.hpp"
#include "nlslab/lp.hpp"
#include "nlslab/trace.hpp"

namespace nlslab {

enum class Equation { Autonomous, Nonautonomous };
enum class Splitting { Strang };
enum class StepSchedule {
  Uniform,   ///< fixed step over the whole span
  Geometric  ///< step proportional to t (refines toward t = 0); equation (B) only
};

struct SolverConfig {
  RadialGrid grid{32.0, 2048};
  double dt = 1e-3;
  Splitting splitting = Splitting::Strang;
  StepSchedule schedule = StepSchedule::Uniform;
  std::size_t stride = 1;          ///< solver steps between stored rows/snapshots
  double boundary_tol = 1e-6;      ///< boundary-leakage warning threshold
  std::uint64_t seed = 0;          ///< recorded with artifacts; no solver randomness
  bool nonlinear_enabled = true;   ///< test hook: false integrates the free equation
};

/// One Strang step of equation (A): half linear (multiplier e^{-i k^2 dt/4}),
/// exact nonlinear phase U <- e^{-i|U| dt} U, half linear. Either sign of dt.
/// Throws Error on non-finite output (overflow), naming nothing but the step;
/// evolve() adds the failing time.
RadialField step_autonomous(const RadialField& u, double dt, bool nonlinear_enabled = true);

/// One Strang step of equation (B) from time t to t + dt. The nonlinear
/// substep uses the exact phase integral: U <- e^{-2i|U|(sqrt(t+dt)-sqrt(t))} U.
/// Requires t > 0 and t + dt > 0 (no crossing of t = 0).
RadialField step_nonautonomous(const RadialField& u, double t, double dt,
                               bool nonlinear_enabled = true);

struct EvolveResult {
  SpaceTimeTrace trace;   ///< snapshots every `stride` steps (aux = W when tracked)
  EnergyTrace energy;     ///< rows at the same cadence; P-history at every step
  RadialField final_field;
};

/// Integrate from t_begin to t_end (backward when t_end < t_begin). The step
/// count is round(|span|/dt) so the endpoint is hit exactly with a step within
/// rounding of the requested dt. When `v_plus` is non-null the linear part
/// V(t) = S(t) v_plus is maintained spectrally (never stepped) and the energy
/// rows' W-columns refer to W = U - V, stored per snapshot in trace.aux.
EvolveResult evolve(const SolverConfig& config, const RadialField& initial, Equation eq,
                    double t_begin, double t_end, const RadialField* v_plus = nullptr,
                    WarningSink sink = nullptr);

/// Which time-power multiplies the gradient term in d(calE)/dt.
struct IncrementReport {
  double residual_minus = 0.0;  ///< RMS(FD - candidate) with exponent -1/2
  double residual_plus = 0.0;   ///< RMS(FD - candidate) with exponent +1/2
  double winner = 0.0;          ///< -0.5 or +0.5, whichever residual is smaller
  std::vector<double> times;    ///< interior snapshot times (centered differences)
  std::vector<double> e_running;  ///< running error term e(t), trapezoid-accumulated
};

/// Compare centered finite differences of the modified energy along a stored
/// trajectory against the two candidate increment integrands
///   Re Int (|U|U - |W|W) conj(W_t) dx + (1/8) t^{sigma} Int |grad W|^2 dx,
/// sigma in {-1/2, +1/2}, with W_t evaluated spectrally from the equation.
/// Requires a trace that stored W snapshots (aux) and at least 3 rows.
IncrementReport energy_increment_check(const SpaceTimeTrace& trace);

struct PipelineReport {
  DecompositionReport split;
  EnergyTrace energy;
  SpaceTimeTrace trace;
  double calE_T0 = 0.0;          ///< modified energy at the final-data end
  double sup_calE = 0.0;         ///< sup over the integrated window [t0, T0]
  bool bootstrap_held = false;   ///< sup_calE <= 2 * calE_T0
  double bootstrap_margin = 0.0; ///< 2*calE_T0 - sup_calE (positive when held)
  double A = 0.0;                ///< calE_T0 / N0
  bool truncation_ok = true;     ///< boundary leakage stayed below config.boundary_tol
  double duhamel_tail = 0.0;     ///< one-Picard-correction proxy for the tail
                                 ///< Int_{T0}^{8 T0} tau^{-1/2} || |U_free|U_free ||_L2 dtau
  std::vector<std::string> warnings;
};

/// The full high/low experiment: split u0 at delta0, form the final-data
/// approximation U(T0) = S(T0)(v_plus + w_plus), integrate equation (B)
/// backward from T0 to t0 tracking V(t) = S(t) v_plus exactly, and record the
/// modified-energy bootstrap quantities. Requires 0 < t0 < T0 and delta0 > 0.
PipelineReport run_high_low_pipeline(const RadialField& u0, double delta0, double t0, double T0,
                                     const SolverConfig& config);

std::string pipeline_report_json(const PipelineReport& rep);

struct PicardReport {
  std::vector<double> d;       ///< sup-in-time ||J^s(u^{k+1} - u^k)||_{L^2} per iteration
  std::vector<double> ratios;  ///< d[k+1]/d[k]
  bool contracted = false;         ///< all ratios < 1
  bool ratios_decreasing = false;  ///< least-squares slope of log(ratios) < 0
  bool diverged = false;           ///< ratio >= 1 on 3 consecutive iterations
  double slope = 0.0;              ///< the log-ratio slope
  double kappa = 0.0;     ///< empirical contraction constant at iteration 1:
                          ///< d1 / ((||J^s u0|| + ||J^s u1||)_{L4L3} * ||J^s(u1-u0)||_{L4L3})
  double measured_R = 0.0;  ///< sup-in-time ||J^s u^{last}||_{L^2} (resolution bound)
  std::size_t nodes = 0;
  int iterations = 0;
  RadialField final_center;  ///< last iterate at the center node t0
  std::vector<double> node_times;
  std::vector<RadialField> final_nodes;  ///< last iterate at every node
};

/// Duhamel fixed-point iteration for equation (A) around t0:
///   u^{k+1}(t) = S(t - t0) u(t0) - i Int_{t0}^{t} S(t - tau) |u^k| u^k dtau
/// on n_nodes equispaced times in [t0-T, t0+T] (n_nodes odd so t0 is a node),
/// with the integral by trapezoid quadrature outward from the center, in the
/// interaction picture. Differences are measured in the sup-in-time L^2 norm
/// of |J(t)|^s applied without the outer modulation (same L^2 size).
/// Requires t0 != 0, 0 < T < |t0|, s in [0, 1], n_nodes odd >= 3.
PicardReport picard_lwp(const RadialField& u_t0, double t0, double s, double T,
                        const SolverConfig& config, int n_iter = 6, std::size_t n_nodes = 65);

std::string picard_report_json(const PicardReport& rep);

}  // namespace nlslab

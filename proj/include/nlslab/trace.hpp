#pragma once
/// \file trace.hpp
/// Time-series containers produced by the integrator: scalar functional
/// records (EnergyTrace) and stored field snapshots (SpaceTimeTrace).

#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

/// Running trapezoid accumulator for the time integral
///   Integral_{t_start}^{t} s * ||u(s)||_{L3}^3 ds
/// appearing in the conserved pseudo-conformal functional. The sample list
/// is kept so the accumulated value can be re-derived and cross-checked.
struct PHistory {
  std::vector<double> times;
  std::vector<double> values;  ///< integrand samples y(s) = s * Integral |u|^3
  double integral = 0.0;

  void accumulate(double t, double value) {
    if (!times.empty()) integral += 0.5 * (t - times.back()) * (value + values.back());
    times.push_back(t);
    values.push_back(value);
  }
  /// Full trapezoid re-summation over the stored samples.
  double recompute() const {
    double acc = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i)
      acc += 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
    return acc;
  }
};

/// Scalar functionals along a trajectory. For runs that track a linear part
/// V, the W-columns refer to W = U - V; for single-field runs they are
/// evaluated on the field itself.
struct EnergyTrace {
  struct Row {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double P = 0.0;       ///< pseudo-conformal functional with history term
    double calE = 0.0;    ///< modified energy of W
    double h1_W = 0.0;    ///< ||grad W||_L2
    double l3_W = 0.0;    ///< ||W||_L3
    double h12_W = 0.0;   ///< ||W||_{H^{1/2}} (homogeneous)
  };
  std::vector<Row> rows;
  PHistory history;
};

/// Stored snapshots over a window [a, b]. `aux` optionally carries a second
/// field per time (the difference field W when a linear part is tracked).
struct SpaceTimeTrace {
  std::vector<double> times;
  std::vector<RadialField> fields;
  std::vector<RadialField> aux;
  double a = 0.0, b = 0.0;  ///< window bounds, a <= b
  std::size_t stride = 1;   ///< solver steps between stored snapshots

  std::size_t size() const { return times.size(); }
  bool has_aux() const { return !aux.empty(); }
};

/// CSV serialization with columns t,mass,energy,P,calE,h1_W,l3_W,h12_W.
std::string energy_trace_csv(const EnergyTrace& trace);

/// JSON summary: per-column min/max and relative drift over the trace.
std::string energy_trace_summary_json(const EnergyTrace& trace);

}  // namespace nlslab

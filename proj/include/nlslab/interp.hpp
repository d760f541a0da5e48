#pragma once
/// \file interp.hpp
/// Natural cubic spline interpolation and grid resampling with a truncation
/// diagnostic. Resampling always interpolates the g = r*f representation
/// (never f itself), which is regular at r = 0.

#include <functional>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

/// Natural cubic spline through strictly increasing abscissae. Evaluates to
/// 0 outside [x_front, x_back].
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;

 private:
  std::vector<double> x_, y_, ypp_;  // second derivatives at the knots
};

struct ResampleResult {
  RadialField field;
  /// Relative L2 mass of the input from r = R - dr outward, counted only when
  /// the requested scaling actually reads past that radius (reads beyond R
  /// return 0).
  double truncation_loss = 0.0;
};

/// Return amplitude * phase(r) * (conjugate ? conj : id)(f(alpha * r))
/// sampled on the input grid, via cubic interpolation of g. Values requested
/// beyond R - dr are treated as 0 and accounted in truncation_loss.
/// Requires alpha > 0.
ResampleResult resample(const RadialField& in, double alpha,
                        const std::function<cx(double)>& phase, cx amplitude, bool conjugate);

}  // namespace nlslab

#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nlslab/common.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

/// Dyadic frequency ladder aligned to the sine-basis grid: rung j carries the
/// frequency N_j = 2^j * pi/R, so every band multiplier has exact support on
/// the discrete spectrum.
struct DyadicLadder {
  double base = 0.0;  ///< smallest rung, pi/R
  int j_full_lo = 0;  ///< full reconstruction range: sum over [j_full_lo, j_full_hi]
  int j_full_hi = 0;  ///< telescopes to the identity on the grid spectrum
  int j_band_lo = 0;  ///< comfortably resolved band (no warnings)
  int j_band_hi = 0;

  double frequency(int j) const { return std::ldexp(base, j); }
};

DyadicLadder make_ladder(const RadialGrid& grid);

/// Band multiplier psi_N(k) = phi(k/N) - phi(2k/N); support exactly [N/2, 2N].
double band_multiplier(double k, double N);

/// Frequency projection onto the dyadic band around N. Warns (never throws)
/// when N sits outside the comfortably resolved band [4*pi/R, k_max/4].
RadialField project_dyadic(const RadialField& u, double N, WarningSink sink = nullptr);
SpectralCoeffs project_dyadic(const SpectralCoeffs& c, double N);

/// Pointwise square function over the full ladder: S(r) = sqrt(sum_N |u_N(r)|^2),
/// returned as a real-valued field (g = r*S).
RadialField square_function(const RadialField& u);

/// ||S u||_{L^p} / ||u||_{L^p} over the full ladder.
double square_function_ratio(const RadialField& u, double p = 3.0);

/// Spatial high/low split of initial data at a dyadic radius N0, with the
/// matched final-data pair under the conjugate-Fourier map.
struct DecompositionReport {
  double delta0 = 0.0;
  double N0 = 0.0;        ///< selected dyadic radius (0 when the search failed)
  bool ok = false;        ///< true when some N0 <= R/4 met the tail bound
  double tail_norm = 0.0; ///< || |x|^{1/2} * (high part) ||_{L^2} at the selected N0
                          ///< (residual tail at the largest candidate on failure)
  RadialField v0, w0;     ///< spatial high/low parts, v0 + w0 = u0 exactly
  RadialField v_plus, w_plus;  ///< conjugate-Fourier final data of v0 / w0
  std::map<std::string, double> v_norms;  ///< l2, h_half of v_plus, tail of v0
  std::map<std::string, double> w_norms;  ///< l2, h1 of w_plus
  double high_support_leak = 0.0;  ///< max_N ||P_N v_plus||^2 / ||v_plus||^2 over N <= N0/8
  std::vector<std::string> warnings;
};

/// Finds the smallest dyadic N0 = 2^j > 1 (j >= 1, N0 <= R/4) with
/// || |x|^{1/2} (1 - phi(r/N0)) u0 ||_{L^2} <= delta0, then splits
/// u0 = v0 + w0 with complementary smooth cutoffs and maps both pieces to
/// final data. A failed search is reported (ok = false), not thrown.
DecompositionReport split_high_low(const RadialField& u0, double delta0);

std::string decomposition_report_json(const DecompositionReport& rep);

}  // namespace nlslab

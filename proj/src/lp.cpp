#include "nlslab/lp.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "nlslab/cutoffs.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"

namespace nlslab {

DyadicLadder make_ladder(const RadialGrid& grid) {
  DyadicLadder ladder;
  ladder.base = kPi / grid.R;
  ladder.j_full_lo = 0;
  int j = 0;
  while ((std::size_t{1} << j) < grid.M - 1) ++j;
  ladder.j_full_hi = j;
  ladder.j_band_lo = 2;
  j = 0;
  while ((std::size_t{1} << (j + 3)) <= grid.M - 1) ++j;
  ladder.j_band_hi = j;
  return ladder;
}

double band_multiplier(double k, double N) {
  return cutoff_profile(k / N) - cutoff_profile(2.0 * k / N);
}

SpectralCoeffs project_dyadic(const SpectralCoeffs& c, double N) {
  if (!(N > 0.0)) throw InputError("project_dyadic: band frequency N must be positive");
  SpectralCoeffs out = c;
  for (std::size_t n = 0; n < out.size(); ++n) out.b[n] *= band_multiplier(c.grid.k(n), N);
  return out;
}

RadialField project_dyadic(const RadialField& u, double N, WarningSink sink) {
  const DyadicLadder ladder = make_ladder(u.grid);
  if (N < ladder.frequency(ladder.j_band_lo) || N > ladder.frequency(ladder.j_band_hi))
    warn(sink, "project_dyadic: band N=" + std::to_string(N) +
                   " outside the comfortably resolved range [" +
                   std::to_string(ladder.frequency(ladder.j_band_lo)) + ", " +
                   std::to_string(ladder.frequency(ladder.j_band_hi)) + "]");
  return dst_inverse(project_dyadic(dst_forward(u), N));
}

RadialField square_function(const RadialField& u) {
  const DyadicLadder ladder = make_ladder(u.grid);
  const SpectralCoeffs c = dst_forward(u);
  std::vector<double> acc(u.size(), 0.0);
  for (int j = ladder.j_full_lo; j <= ladder.j_full_hi; ++j) {
    const RadialField piece = dst_inverse(project_dyadic(c, ladder.frequency(j)));
    for (std::size_t i = 0; i < u.size(); ++i) acc[i] += std::norm(piece.g[i]);
  }
  RadialField out(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i) out.g[i] = std::sqrt(acc[i]);
  return out;
}

double square_function_ratio(const RadialField& u, double p) {
  const double denom = lebesgue_norm(u, p);
  if (denom == 0.0) return 0.0;
  return lebesgue_norm(square_function(u), p) / denom;
}

DecompositionReport split_high_low(const RadialField& u0, double delta0) {
  if (!(delta0 > 0.0)) throw InputError("split_high_low: delta0 must be positive");
  const double full = weighted_norm(u0, 0.5);
  if (!std::isfinite(full))
    throw InputError("split_high_low: weighted norm |||x|^{1/2} u0||_{L^2} is not finite");

  DecompositionReport rep;
  rep.delta0 = delta0;

  // Doubling search over dyadic radii 2, 4, ..., <= R/4.
  double candidate = 0.0, tail = full;
  for (double n0 = 2.0; n0 <= u0.grid.R / 4.0; n0 *= 2.0) {
    candidate = n0;
    tail = weighted_norm(scale_cutoff_high(u0, n0), 0.5);
    if (tail <= delta0) {
      rep.ok = true;
      break;
    }
  }
  if (candidate == 0.0)
    throw InputError("split_high_low: grid radius too small for any dyadic split (R/4 < 2)");
  rep.N0 = candidate;
  rep.tail_norm = tail;
  if (!rep.ok)
    rep.warnings.push_back("no dyadic radius N0 <= R/4 met the tail bound " +
                           std::to_string(delta0) + "; residual tail " + std::to_string(tail) +
                           " at N0 = " + std::to_string(candidate));

  rep.v0 = scale_cutoff_high(u0, rep.N0);
  rep.w0 = scale_cutoff_low(u0, rep.N0);
  rep.v_plus = conj_fourier_final_data(rep.v0);
  rep.w_plus = conj_fourier_final_data(rep.w0);

  rep.v_norms["l2"] = l2_norm(rep.v_plus);
  rep.v_norms["h_half"] = sobolev_norm(rep.v_plus, 0.5);
  rep.v_norms["tail"] = rep.tail_norm;
  rep.w_norms["l2"] = l2_norm(rep.w_plus);
  rep.w_norms["h1"] = sobolev_norm(rep.w_plus, 1.0);

  // Frequency-support audit: the high piece's final data should carry almost
  // no energy in bands N <= N0/8.
  const double m_tot = mass(rep.v_plus);
  if (m_tot > 0.0) {
    const DyadicLadder ladder = make_ladder(u0.grid);
    const SpectralCoeffs cv = dst_forward(rep.v_plus);
    for (int j = ladder.j_full_lo; j <= ladder.j_full_hi; ++j) {
      const double N = ladder.frequency(j);
      if (N > rep.N0 / 8.0) break;
      const double leak = mass(dst_inverse(project_dyadic(cv, N))) / m_tot;
      rep.high_support_leak = std::max(rep.high_support_leak, leak);
    }
  }
  return rep;
}

std::string decomposition_report_json(const DecompositionReport& rep) {
  nlohmann::json j;
  j["delta0"] = rep.delta0;
  j["N0"] = rep.N0;
  j["ok"] = rep.ok;
  j["tail_norm"] = rep.tail_norm;
  j["v_norms"] = rep.v_norms;
  j["w_norms"] = rep.w_norms;
  j["high_support_leak"] = rep.high_support_leak;
  j["warnings"] = rep.warnings;
  return j.dump(2);
}

}  // namespace nlslab

#include "nlslab/propagator.hpp"

#include <cmath>

#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"

namespace nlslab {

SpectralCoeffs free_propagate(const SpectralCoeffs& c, double t) {
  SpectralCoeffs out(c.grid);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double k = c.grid.k(i);
    out.b[i] = c.b[i] * std::polar(1.0, -0.5 * k * k * t);
  }
  return out;
}

RadialField free_propagate(const RadialField& u, double t) {
  if (t == 0.0) return u;
  return dst_inverse(free_propagate(dst_forward(u), t));
}

RadialField kernel_propagate(const RadialField& u, double t) {
  if (t == 0.0) throw InputError("kernel_propagate: t must be nonzero");
  const RadialGrid& gr = u.grid;
  const std::size_t L = gr.nodes();
  // r * (S(t)u)(r) = (2 pi i t)^(-3/2) * 4 pi t * e^{i r^2/(2t)} * dr *
  //                  sum_m g_m e^{i r_m^2/(2t)} sin(r r_m / t).
  const cx pref = std::pow(cx(0.0, 2.0 * kPi * t), -1.5) * (4.0 * kPi * t) * gr.dr();
  std::vector<cx> q(L);
  for (std::size_t m = 0; m < L; ++m) {
    const double rm = gr.r(m);
    q[m] = u.g[m] * std::polar(1.0, rm * rm / (2.0 * t));
  }
  RadialField out(gr);
  for (std::size_t i = 0; i < L; ++i) {
    const double r = gr.r(i);
    cx acc(0.0, 0.0);
    for (std::size_t m = 0; m < L; ++m) acc += q[m] * std::sin(r * gr.r(m) / t);
    out.g[i] = pref * std::polar(1.0, r * r / (2.0 * t)) * acc;
  }
  return out;
}

RadialField vector_field_J(const RadialField& u, double t, double s) {
  if (t == 0.0) throw InputError("vector_field_J: t must be nonzero");
  if (!(s >= 0.0)) throw InputError("vector_field_J: order s must be >= 0");
  if (s == 0.0) return u;
  RadialField w = modulate(u, t, -1);
  SpectralCoeffs c = dst_forward(w);
  const double at = std::abs(t);
  for (std::size_t i = 0; i < c.size(); ++i) c.b[i] *= std::pow(at * c.grid.k(i), s);
  return modulate(dst_inverse(c), t, +1);
}

ResampleResult pseudo_conformal(const RadialField& u, double t) {
  if (t == 0.0) throw InputError("pseudo_conformal: t must be nonzero");
  const cx amplitude = std::pow(cx(0.0, t), -1.5);
  const double alpha = 1.0 / std::abs(t);
  const double half_inv_t = 0.5 / t;
  return resample(
      u, alpha, [half_inv_t](double r) { return std::polar(1.0, half_inv_t * r * r); },
      amplitude, /*conjugate=*/true);
}

RadialField conj_fourier_final_data(const RadialField& u) {
  const RadialGrid& gr = u.grid;
  const std::size_t L = gr.nodes();
  const double pref = std::sqrt(2.0 / kPi) * gr.dr();
  RadialField out(gr);
  for (std::size_t i = 0; i < L; ++i) {
    const double r = gr.r(i);
    cx acc(0.0, 0.0);
    for (std::size_t m = 0; m < L; ++m) acc += std::conj(u.g[m]) * std::sin(r * gr.r(m));
    out.g[i] = pref * acc;
  }
  return out;
}

}  // namespace nlslab

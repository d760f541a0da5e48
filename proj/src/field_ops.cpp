#include "nlslab/field_ops.hpp"

#include <cmath>
#include <string>

namespace nlslab {

namespace {
void require_same_grid(const RadialField& a, const RadialField& b, const char* who) {
  if (!(a.grid == b.grid)) throw InputError(std::string(who) + ": grids differ");
}
}  // namespace

SpectralCoeffs apply_multiplier(const SpectralCoeffs& c, const std::function<cx(double)>& m) {
  SpectralCoeffs out(c.grid);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double k = c.grid.k(i);
    const cx w = m(k);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw InputError("apply_multiplier: non-finite multiplier value at k=" + std::to_string(k));
    out.b[i] = w * c.b[i];
  }
  return out;
}

RadialField apply_multiplier(const RadialField& u, const std::function<cx(double)>& m) {
  return dst_inverse(apply_multiplier(dst_forward(u), m));
}

RadialField modulate(const RadialField& u, double t, int sign) {
  if (t == 0.0) throw InputError("modulate: t must be nonzero");
  if (sign != 1 && sign != -1) throw InputError("modulate: sign must be +1 or -1");
  RadialField out(u.grid);
  const double c = static_cast<double>(sign) / (2.0 * t);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u.grid.r(i);
    out.g[i] = u.g[i] * std::polar(1.0, c * r * r);
  }
  return out;
}

RadialField radial_derivative(const RadialField& u) {
  SpectralCoeffs c = dst_forward(u);
  for (std::size_t i = 0; i < c.size(); ++i) c.b[i] *= c.grid.k(i);
  const std::vector<cx> gprime = cosine_series_eval(u.grid, c.b);
  RadialField out(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u.grid.r(i);
    out.g[i] = gprime[i] - u.g[i] / r;  // r * f' = g' - f
  }
  return out;
}

RadialField apply_vector_field(const RadialField& u, double t) {
  SpectralCoeffs c = dst_forward(u);
  for (std::size_t i = 0; i < c.size(); ++i) c.b[i] *= c.grid.k(i);
  const std::vector<cx> gprime = cosine_series_eval(u.grid, c.b);
  RadialField out(u.grid);
  const cx it(0.0, t);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u.grid.r(i);
    out.g[i] = r * u.g[i] + it * (gprime[i] - u.g[i] / r);
  }
  return out;
}

RadialField add(const RadialField& a, const RadialField& b) {
  require_same_grid(a, b, "add");
  RadialField out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.g[i] = a.g[i] + b.g[i];
  return out;
}

RadialField subtract(const RadialField& a, const RadialField& b) {
  require_same_grid(a, b, "subtract");
  RadialField out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.g[i] = a.g[i] - b.g[i];
  return out;
}

RadialField scale(const RadialField& a, cx factor) {
  RadialField out(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) out.g[i] = factor * a.g[i];
  return out;
}

}  // namespace nlslab

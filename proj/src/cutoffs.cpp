#include "nlslab/cutoffs.hpp"

#include <cmath>
#include <string>

namespace nlslab {

double cutoff_profile(double x) {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  const double y = x - 1.0;
  const double y4 = y * y * y * y;
  // Degree-7 smoothstep: s(0)=0, s(1)=1, with three vanishing derivatives
  // at both ends.
  const double s = y4 * (35.0 - 84.0 * y + 70.0 * y * y - 20.0 * y * y * y);
  return 1.0 - s;
}

double cutoff_weight(CutoffKind kind, int j, double r) {
  const auto phi_at = [r](int jj) { return cutoff_profile(std::ldexp(r, -jj)); };
  switch (kind) {
    case CutoffKind::Shell:
      return phi_at(j) - phi_at(j - 1);
    case CutoffKind::Ball:
      return phi_at(j);
    case CutoffKind::WideShell:
      return phi_at(j + 1) - phi_at(j - 2);
    case CutoffKind::WiderShell:
      return phi_at(j + 2) - phi_at(j - 3);
  }
  throw InputError("cutoff_weight: unknown cutoff kind");
}

RadialField spatial_cutoff(const RadialField& u, int j, CutoffKind kind, WarningSink sink) {
  const double shell = std::ldexp(1.0, j);
  if (shell < 4.0 * u.grid.dr() || 2.0 * shell > u.grid.R)
    warn(sink, "spatial_cutoff: shell 2^" + std::to_string(j) +
                   " is not resolved by the grid (dr=" + std::to_string(u.grid.dr()) +
                   ", R=" + std::to_string(u.grid.R) + ")");
  RadialField out(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i)
    out.g[i] = u.g[i] * cutoff_weight(kind, j, u.grid.r(i));
  return out;
}

RadialField scale_cutoff_high(const RadialField& u, double N0) {
  if (!(N0 > 0.0)) throw InputError("scale_cutoff_high: N0 must be positive");
  RadialField out(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i)
    out.g[i] = u.g[i] * (1.0 - cutoff_profile(u.grid.r(i) / N0));
  return out;
}

RadialField scale_cutoff_low(const RadialField& u, double N0) {
  if (!(N0 > 0.0)) throw InputError("scale_cutoff_low: N0 must be positive");
  RadialField out(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i)
    out.g[i] = u.g[i] * cutoff_profile(u.grid.r(i) / N0);
  return out;
}

}  // namespace nlslab

#include "nlslab/grid.hpp"

#include <cmath>
#include <string>

namespace nlslab {

RadialField sample_function(const RadialGrid& grid, const std::function<cx(double)>& f) {
  RadialField u(grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = grid.r(i);
    const cx v = f(r);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InputError("sample_function: non-finite sample at node m=" + std::to_string(i + 1) +
                       ", r=" + std::to_string(r));
    u.g[i] = r * v;
  }
  return u;
}

double boundary_leakage(const RadialField& u) {
  double peak = 0.0;
  for (const cx& v : u.g) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::abs(u.g.back()) / peak;
}

void check_decay(const RadialField& u, double tol, WarningSink sink) {
  const double leak = boundary_leakage(u);
  if (leak > tol)
    warn(sink, "field has not decayed at r=R: |g_{M-1}|/max|g| = " + std::to_string(leak) +
                   " exceeds boundary tolerance " + std::to_string(tol));
}

}  // namespace nlslab

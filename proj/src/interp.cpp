#include "nlslab/interp.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n) throw InputError("CubicSpline: need >= 3 matching knots");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw InputError("CubicSpline: abscissae must increase");
  // Solve the tridiagonal system for natural boundary conditions
  // (zero second derivative at both ends) with the Thomas algorithm.
  ypp_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (hl + hr);
    upper[i] = hr;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
  }
  diag[n - 1] = 1.0;
  // Forward elimination (lower entries are hl; ends are identity rows).
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double w = hl / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    ypp_[i] = (rhs[i] - upper[i] * ypp_[i + 1]) / diag[i];
    if (i == 1) break;
  }
}

double CubicSpline::operator()(double x) const {
  if (x < x_.front() || x > x_.back()) return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t j = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  if (j >= x_.size() - 1) j = x_.size() - 2;
  const double h = x_[j + 1] - x_[j];
  const double a = (x_[j + 1] - x) / h;
  const double b = (x - x_[j]) / h;
  return a * y_[j] + b * y_[j + 1] +
         ((a * a * a - a) * ypp_[j] + (b * b * b - b) * ypp_[j + 1]) * (h * h) / 6.0;
}

ResampleResult resample(const RadialField& in, double alpha,
                        const std::function<cx(double)>& phase, cx amplitude, bool conjugate) {
  if (!(alpha > 0.0)) throw InputError("resample: scale alpha must be positive");
  const RadialGrid& gr = in.grid;
  const std::size_t L = gr.nodes();
  // Knots 0..R with the known boundary values g(0) = g(R) = 0.
  std::vector<double> xs(L + 2), re(L + 2, 0.0), im(L + 2, 0.0);
  xs[0] = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    xs[i + 1] = gr.r(i);
    re[i + 1] = in.g[i].real();
    im[i + 1] = in.g[i].imag();
  }
  xs[L + 1] = gr.R;
  const CubicSpline sre(xs, re), sim(xs, im);

  ResampleResult out;
  out.field = RadialField(gr);
  const double edge = gr.R - gr.dr();
  bool read_beyond_edge = false;
  for (std::size_t i = 0; i < L; ++i) {
    const double r = gr.r(i);
    const double x = alpha * r;
    cx gv(0.0, 0.0);
    if (x > edge) {
      read_beyond_edge = true;  // treated as 0 by the spline beyond R anyway
      if (x <= gr.R) gv = cx(sre(x), sim(x));
    } else {
      gv = cx(sre(x), sim(x));
    }
    if (conjugate) gv = std::conj(gv);
    // r * f(alpha r) = g(alpha r) / alpha.
    out.field.g[i] = amplitude * phase(r) * gv / alpha;
  }
  if (read_beyond_edge) {
    double tail = 0.0, total = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
      const double m = std::norm(in.g[i]);
      total += m;
      if (gr.r(i) >= edge) tail += m;
    }
    out.truncation_loss = (total > 0.0) ? std::sqrt(tail / total) : 0.0;
  }
  return out;
}

}  // namespace nlslab

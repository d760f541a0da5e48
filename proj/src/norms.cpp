#include "nlslab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlslab/cutoffs.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/lp.hpp"

namespace nlslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExactTol = 1e-12;

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

/// 1/p' = 1 - 1/p for p in [1, inf].
double dual_inv(double p) { return 1.0 - inv(p); }

double time_trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
  double acc = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
    acc += 0.5 * std::abs(t[i] - t[i - 1]) * (y[i] + y[i - 1]);
  return acc;
}

double lq_time(const std::vector<double>& t, std::vector<double> y, double q) {
  if (std::isinf(q)) return *std::max_element(y.begin(), y.end());
  for (double& v : y) v = std::pow(v, q);
  return std::pow(time_trapezoid(t, y), 1.0 / q);
}

}  // namespace

double l2_norm(const RadialField& u) {
  double acc = 0.0;
  for (const cx& v : u.g) acc += std::norm(v);
  return std::sqrt(4.0 * kPi * u.grid.dr() * acc);
}

double lebesgue_norm(const RadialField& u, double p) {
  if (!(p >= 1.0)) throw InputError("lebesgue_norm: p must be >= 1, got " + std::to_string(p));
  if (std::isinf(p)) {
    double peak = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) peak = std::max(peak, std::abs(u.f(i)));
    if (u.size() >= 3) {
      // Quadratic extrapolation of f toward the origin from the three
      // smallest nodes (f(0) is not a grid node).
      const cx f0 = 3.0 * u.f(0) - 3.0 * u.f(1) + u.f(2);
      peak = std::max(peak, std::abs(f0));
    }
    return peak;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += std::pow(u.grid.r(i), 2.0 - p) * std::pow(std::abs(u.g[i]), p);
  return std::pow(4.0 * kPi * u.grid.dr() * acc, 1.0 / p);
}

double weighted_lebesgue_norm(const RadialField& u, double beta, double q) {
  if (!(q >= 1.0))
    throw InputError("weighted_lebesgue_norm: q must be >= 1, got " + std::to_string(q));
  if (std::isinf(q)) {
    double peak = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      peak = std::max(peak, std::pow(u.grid.r(i), beta) * std::abs(u.f(i)));
    return peak;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += std::pow(u.grid.r(i), beta * q + 2.0 - q) * std::pow(std::abs(u.g[i]), q);
  return std::pow(4.0 * kPi * u.grid.dr() * acc, 1.0 / q);
}

double sobolev_norm(const RadialField& u, double s, WarningSink sink) {
  double sc = s;
  if (s < -1.0 || s > 2.0) {
    sc = std::clamp(s, -1.0, 2.0);
    warn(sink, "sobolev_norm: order " + std::to_string(s) +
                   " outside the resolvable band [-1, 2]; clamped to " + std::to_string(sc));
  }
  const SpectralCoeffs c = dst_forward(u);
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    acc += std::pow(c.grid.k(i), 2.0 * sc) * std::norm(c.b[i]);
  return std::sqrt(2.0 * kPi * u.grid.R * acc);
}

double weighted_norm(const RadialField& u, double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += std::pow(u.grid.r(i), 2.0 * s) * std::norm(u.g[i]);
  return std::sqrt(4.0 * kPi * u.grid.dr() * acc);
}

double mass(const RadialField& u) {
  const double n = l2_norm(u);
  return n * n;
}

double energy(const RadialField& u, double p) {
  if (!(p > 0.0)) throw InputError("energy: nonlinearity power p must be positive");
  const double grad = sobolev_norm(u, 1.0);
  const double lp = lebesgue_norm(u, p + 2.0);
  return 0.25 * grad * grad + std::pow(lp, p + 2.0) / (p + 2.0);
}

double pseudo_conformal_P(const RadialField& u, double t, const PHistory& history) {
  if (history.times.empty()) {
    if (t != 0.0)
      throw InputError("pseudo_conformal_P: history accumulator is empty but t != 0");
  } else {
    const double last = history.times.back();
    if (std::abs(last - t) > 1e-9 * std::max(1.0, std::abs(t)))
      throw InputError("pseudo_conformal_P: history accumulator gap (last recorded time " +
                       std::to_string(last) + ", requested " + std::to_string(t) + ")");
  }
  const double j2 = l2_norm(apply_vector_field(u, t));
  const double l3 = lebesgue_norm(u, 3.0);
  return j2 * j2 + (4.0 / 3.0) * t * t * (l3 * l3 * l3) - (2.0 / 3.0) * history.integral;
}

double modified_energy(const RadialField& w, double t) {
  if (!(t > 0.0)) throw InputError("modified_energy: requires t > 0");
  const double grad = sobolev_norm(w, 1.0);
  const double l3 = lebesgue_norm(w, 3.0);
  return 0.25 * std::sqrt(t) * grad * grad + (l3 * l3 * l3) / 3.0;
}

Criticality criticality(double d, double p) {
  if (!(d >= 1.0) || !(p > 0.0)) throw InputError("criticality: requires d >= 1 and p > 0");
  return Criticality{d / 2.0 - 2.0 / p, (2.0 - d + std::sqrt(d * d + 12.0 * d + 4.0)) / (2.0 * d)};
}

// ---------------------------------------------------------------------------
// Space-time functionals.
// ---------------------------------------------------------------------------

double strichartz_norm(const SpaceTimeTrace& trace, double q, double r) {
  return strichartz_norm(trace, q, r, [](double) { return 1.0; });
}

double strichartz_norm(const SpaceTimeTrace& trace, double q, double r,
                       const std::function<double(double)>& time_weight) {
  if (trace.size() == 0) throw InputError("strichartz_norm: empty window");
  if (!(q >= 1.0) || !(r >= 1.0)) throw InputError("strichartz_norm: q, r must be >= 1");
  std::vector<double> y(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i)
    y[i] = time_weight(trace.times[i]) * lebesgue_norm(trace.fields[i], r);
  return lq_time(trace.times, std::move(y), q);
}

double lorentz_time_norm(const SpaceTimeTrace& trace, double q, double p, double r) {
  if (trace.size() == 0) throw InputError("lorentz_time_norm: empty window");
  if (!(q >= 1.0) || !(p >= 1.0) || !(r >= 1.0))
    throw InputError("lorentz_time_norm: exponents must be >= 1");
  // Dyadic shells in the time offset from the window's left endpoint.
  const double a = *std::min_element(trace.times.begin(), trace.times.end());
  std::vector<double> tau(trace.size()), v(trace.size());
  double tau_min = kInf, tau_max = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    tau[i] = trace.times[i] - a;
    v[i] = lebesgue_norm(trace.fields[i], r);
    if (tau[i] > 0.0) tau_min = std::min(tau_min, tau[i]);
    tau_max = std::max(tau_max, tau[i]);
  }
  if (!(tau_max > 0.0)) throw InputError("lorentz_time_norm: window has zero length");
  const int j_lo = static_cast<int>(std::floor(std::log2(tau_min)));
  const int j_hi = static_cast<int>(std::ceil(std::log2(tau_max)));
  double acc = 0.0, sup = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    std::vector<double> y(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i)
      y[i] = cutoff_weight(CutoffKind::Shell, j, tau[i]) * v[i];
    const double wj = lq_time(tau, std::move(y), q);
    sup = std::max(sup, wj);
    if (!std::isinf(p)) acc += std::pow(wj, p);
  }
  return std::isinf(p) ? sup : std::pow(acc, 1.0 / p);
}

double local_smoothing_functional(const SpaceTimeTrace& trace, double sigma) {
  if (trace.size() == 0) throw InputError("local_smoothing_functional: empty window");
  const RadialGrid& gr = trace.fields.front().grid;
  const int j_lo = static_cast<int>(std::ceil(std::log2(4.0 * gr.dr())));
  const int j_hi = static_cast<int>(std::floor(std::log2(gr.R))) - 1;
  std::vector<std::vector<double>> shell_sq(static_cast<std::size_t>(j_hi - j_lo + 1),
                                            std::vector<double>(trace.size(), 0.0));
  for (std::size_t i = 0; i < trace.size(); ++i) {
    RadialField f = (sigma == 0.0)
                        ? trace.fields[i]
                        : apply_multiplier(trace.fields[i],
                                           [sigma](double k) { return cx(std::pow(k, sigma)); });
    for (int j = j_lo; j <= j_hi; ++j) {
      double acc = 0.0;
      for (std::size_t m = 0; m < f.size(); ++m)
        acc += std::norm(f.g[m] * cutoff_weight(CutoffKind::Shell, j, gr.r(m)));
      shell_sq[static_cast<std::size_t>(j - j_lo)][i] = 4.0 * kPi * gr.dr() * acc;
    }
  }
  double best = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    const double sq = time_trapezoid(trace.times, shell_sq[static_cast<std::size_t>(j - j_lo)]);
    best = std::max(best, std::pow(2.0, -0.5 * j) * std::sqrt(sq));
  }
  return best;
}

double xs_proxy(const SpaceTimeTrace& trace, double s) {
  if (trace.size() == 0) throw InputError("xs_proxy: empty window");
  if (!(s >= 0.0) || s > 2.0) throw InputError("xs_proxy: s must lie in [0, 2]");
  const RadialGrid& gr = trace.fields.front().grid;
  const DyadicLadder ladder = make_ladder(gr);
  std::vector<double> sup_sq(static_cast<std::size_t>(ladder.j_band_hi - ladder.j_band_lo + 1),
                             0.0);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const SpectralCoeffs c = dst_forward(trace.fields[i]);
    for (int j = ladder.j_band_lo; j <= ladder.j_band_hi; ++j) {
      const double N = ladder.frequency(j);
      double acc = 0.0;
      for (std::size_t n = 0; n < c.size(); ++n) {
        const double w = band_multiplier(gr.k(n), N);
        if (w != 0.0) acc += std::norm(w * c.b[n]);
      }
      auto& slot = sup_sq[static_cast<std::size_t>(j - ladder.j_band_lo)];
      slot = std::max(slot, 2.0 * kPi * gr.R * acc);
    }
  }
  double total = 0.0;
  for (int j = ladder.j_band_lo; j <= ladder.j_band_hi; ++j)
    total += std::pow(ladder.frequency(j), 2.0 * s) *
             sup_sq[static_cast<std::size_t>(j - ladder.j_band_lo)];
  return std::sqrt(total);
}

// ---------------------------------------------------------------------------
// Inequality audits.
// ---------------------------------------------------------------------------

namespace {
double safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return (lhs == 0.0) ? 0.0 : kInf;
  return lhs / rhs;
}
}  // namespace

AuditReport audit_hardy(const RadialField& u, double p) {
  if (!(p > 1.0 && p < 3.0))
    throw InputError("hardy audit: requires 1 < p < 3 (dimension 3), got p=" + std::to_string(p));
  AuditReport rep;
  rep.name = "hardy";
  rep.params = {{"p", p}};
  rep.lhs = weighted_lebesgue_norm(u, -1.0, p);
  rep.rhs = lebesgue_norm(radial_derivative(u), p);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  return rep;
}

AuditReport audit_gagliardo_nirenberg(const RadialField& u, double s1, double s2, double p1,
                                      double p2, double p3, double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw InputError("gagliardo-nirenberg audit: requires 0 < theta <= 1");
  if (theta == 1.0 && (s1 != s2 || p1 != p2))
    throw InputError(
        "gagliardo-nirenberg audit: theta = 1 is only the identity case s1 = s2, p1 = p2");
  if (!(s1 > 0.0 && s1 <= s2))
    throw InputError("gagliardo-nirenberg audit: requires 0 < s1 <= s2");
  for (double p : {p1, p2, p3})
    if (!(p > 1.0))
      throw InputError("gagliardo-nirenberg audit: requires 1 < p1, p2, p3 <= infinity");
  if (std::abs(inv(p1) - theta * inv(p2) - (1.0 - theta) * inv(p3)) > kExactTol)
    throw InputError(
        "gagliardo-nirenberg audit: exponent relation 1/p1 = theta/p2 + (1-theta)/p3 violated");
  if (std::abs(s1 - theta * s2) > kExactTol)
    throw InputError("gagliardo-nirenberg audit: order relation s1 = theta*s2 violated");
  AuditReport rep;
  rep.name = "gagliardo_nirenberg";
  rep.params = {{"s1", s1}, {"s2", s2}, {"p1", p1}, {"p2", p2}, {"p3", p3}, {"theta", theta}};
  const auto frac = [](double s) {
    return [s](double k) { return cx(std::pow(k, s)); };
  };
  rep.lhs = lebesgue_norm(apply_multiplier(u, frac(s1)), p1);
  rep.rhs = std::pow(lebesgue_norm(apply_multiplier(u, frac(s2)), p2), theta) *
            std::pow(lebesgue_norm(u, p3), 1.0 - theta);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  return rep;
}

AuditReport audit_radial_sobolev(const RadialField& u, double s, double p, double q, double alpha,
                                 double beta) {
  if (!(p >= 1.0) || !(q >= 1.0))
    throw InputError("radial sobolev audit: requires 1 <= p, q <= infinity");
  if (!(s > 0.0 && s < 3.0))
    throw InputError("radial sobolev audit: requires 0 < s < 3 (dimension 3)");
  if (!(alpha > -3.0 * dual_inv(p)))
    throw InputError("radial sobolev audit: requires alpha > -3/p'");
  if (!(beta > -3.0 * dual_inv(q)))
    throw InputError("radial sobolev audit: requires beta > -3/q'");
  const double window = inv(p) + inv(q);
  if (!(window >= 1.0 && window <= 1.0 + s))
    throw InputError("radial sobolev audit: requires 1 <= 1/p + 1/q <= 1 + s");
  if (std::abs(alpha + beta - 3.0 + s - (-3.0 * dual_inv(p) - 3.0 * dual_inv(q))) > kExactTol)
    throw InputError(
        "radial sobolev audit: scaling relation alpha + beta - 3 + s = -3/p' - 3/q' violated");
  const int equalities = static_cast<int>(p == 1.0) + static_cast<int>(std::isinf(p)) +
                         static_cast<int>(q == 1.0) + static_cast<int>(std::isinf(q)) +
                         static_cast<int>(std::abs(window - (1.0 + s)) <= kExactTol);
  if (equalities > 1)
    throw InputError(
        "radial sobolev audit: at most one equality among {p=1, p=inf, q=1, q=inf, "
        "1/p + 1/q = 1+s} is allowed");
  AuditReport rep;
  rep.name = "radial_sobolev";
  rep.params = {{"s", s}, {"p", p}, {"q", q}, {"alpha", alpha}, {"beta", beta}};
  const double q_dual = (q == 1.0) ? kInf : (std::isinf(q) ? 1.0 : q / (q - 1.0));
  rep.lhs = weighted_lebesgue_norm(u, beta, q_dual);
  const RadialField us =
      apply_multiplier(u, [s](double k) { return cx(std::pow(k, s)); });
  rep.rhs = weighted_lebesgue_norm(us, -alpha, p);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  return rep;
}

AuditReport audit_schur(const std::vector<double>& a_seq, const std::vector<double>& b_seq,
                        double a_exp) {
  if (!(a_exp > 0.0)) throw InputError("schur audit: requires exponent a > 0");
  if (a_seq.empty() || a_seq.size() != b_seq.size())
    throw InputError("schur audit: sequences must be nonempty and of equal length");
  double lhs = 0.0;
  for (std::size_t i = 0; i < a_seq.size(); ++i)
    for (std::size_t i1 = 0; i1 <= i; ++i1)
      lhs += std::pow(2.0, -a_exp * static_cast<double>(i - i1)) * a_seq[i] * b_seq[i1];
  double na = 0.0, nb = 0.0;
  for (double v : a_seq) na += v * v;
  for (double v : b_seq) nb += v * v;
  AuditReport rep;
  rep.name = "schur";
  rep.params = {{"a", a_exp}};
  rep.lhs = lhs;
  rep.rhs = std::sqrt(na * nb);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  return rep;
}

}  // namespace nlslab

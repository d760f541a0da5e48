/// Norms, conserved functionals, space-time norms, and inequality audits,
/// all checked against Gaussian closed forms (computable by hand from
/// Integral r^n exp(-a r^2) dr).

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlslab/corpus.hpp"
#include "nlslab/cutoffs.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/lp.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"

using namespace nlslab;

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

SpaceTimeTrace free_trace(const RadialGrid& g, double t0, double t1, double step) {
  const RadialField u = standard_gaussian(g);
  SpaceTimeTrace tr;
  tr.a = t0;
  tr.b = t1;
  for (double t = t0; t <= t1 + 1e-12; t += step) {
    tr.times.push_back(t);
    tr.fields.push_back(free_propagate(u, t));
  }
  return tr;
}

}  // namespace

TEST_CASE("Gaussian closed forms") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);

  CHECK(l2_norm(u) == doctest::Approx(std::pow(kPi, 0.75)).epsilon(1e-12));
  CHECK(mass(u) == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-12));
  CHECK(lebesgue_norm(u, 3.0) == doctest::Approx(std::sqrt(2.0 * kPi / 3.0)).epsilon(1e-12));

  // ||grad u||^2 = (3/2) pi^(3/2); the half-derivative norm is sqrt(2 pi).
  const double grad = sobolev_norm(u, 1.0);
  CHECK(grad * grad == doctest::Approx(1.5 * std::pow(kPi, 1.5)).epsilon(1e-10));
  // The |k|^(1/2) multiplier is not smooth at k = 0, so the spectral sum
  // converges at finite order (measured floor ~1e-5 on this grid).
  CHECK(sobolev_norm(u, 0.5) == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-4));
  CHECK(weighted_norm(u, 0.5) == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-6));

  const double expected_energy =
      0.375 * std::pow(kPi, 1.5) + std::pow(2.0 * kPi / 3.0, 1.5) / 3.0;
  CHECK(energy(u, 1.0) == doctest::Approx(expected_energy).epsilon(1e-10));

  // Supremum reached at the origin (off-grid): quadratic extrapolation.
  CHECK(lebesgue_norm(u, kInfinity) == doctest::Approx(1.0).epsilon(1e-3));

  // At t = 0 the conserved functional reduces to || |x| u ||^2.
  const PHistory empty;
  CHECK(pseudo_conformal_P(u, 0.0, empty) ==
        doctest::Approx(1.5 * std::pow(kPi, 1.5)).epsilon(1e-10));
}

TEST_CASE("critical weighted norm is scale invariant") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  const double base = weighted_norm(u, 0.5);
  for (double lam : {0.5, 2.0}) {
    const RadialField ul = sample_function(g, [lam](double r) {
      return cx(lam * lam * std::exp(-lam * lam * r * r / 2.0), 0.0);
    });
    CHECK(weighted_norm(ul, 0.5) == doctest::Approx(base).epsilon(1e-5));
  }
}

TEST_CASE("norm validation and clamping") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  CHECK_THROWS_AS(lebesgue_norm(u, 0.5), InputError);
  CHECK_THROWS_AS(weighted_lebesgue_norm(u, 1.0, 0.5), InputError);
  CHECK_THROWS_AS(energy(u, 0.0), InputError);
  CHECK_THROWS_AS(criticality(0.0, 1.0), InputError);
  CHECK_THROWS_AS(criticality(3.0, 0.0), InputError);

  std::vector<std::string> warnings;
  const double clamped = sobolev_norm(u, 3.0, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(clamped == doctest::Approx(sobolev_norm(u, 2.0)).epsilon(1e-12));
}

TEST_CASE("criticality exponents for the quadratic 3d flow") {
  const Criticality c = criticality(3.0, 1.0);
  CHECK(c.s_c == -0.5);
  CHECK(c.gamma == 1.0);
}

TEST_CASE("conserved-functional accumulator bookkeeping") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  const PHistory empty;
  CHECK_THROWS_AS(pseudo_conformal_P(u, 0.25, empty), InputError);
  PHistory h;
  h.accumulate(0.0, 0.3);
  h.accumulate(0.5, 0.4);
  CHECK_THROWS_AS(pseudo_conformal_P(u, 1.0, h), InputError);
  CHECK_NOTHROW(pseudo_conformal_P(u, 0.5, h));
}

TEST_CASE("modified energy dependence on time") {
  const RadialGrid g(16.0, 256);
  const RadialField w = corpus(g, 3, CorpusKind::GaussianMix);
  CHECK_THROWS_AS(modified_energy(w, 0.0), InputError);
  CHECK_THROWS_AS(modified_energy(w, -1.0), InputError);
  // E(w, 4) - E(w, 1) = (1/4)(sqrt(4) - 1) ||grad w||^2: the L3 terms cancel.
  const double grad = sobolev_norm(w, 1.0);
  CHECK(modified_energy(w, 4.0) - modified_energy(w, 1.0) ==
        doctest::Approx(0.25 * grad * grad).epsilon(1e-12));
}

TEST_CASE("space-time norms on a constant-in-time trace") {
  const RadialGrid g(16.0, 128);
  const RadialField u = standard_gaussian(g);
  SpaceTimeTrace tr;
  tr.a = 0.0;
  tr.b = 1.0;
  tr.times = {0.0, 0.5, 1.0};
  tr.fields = {u, u, u};
  // Over a unit window the L^q_t average of a constant is the constant.
  CHECK(strichartz_norm(tr, 4.0, 3.0) ==
        doctest::Approx(lebesgue_norm(u, 3.0)).epsilon(1e-12));
  CHECK(strichartz_norm(tr, kInfinity, 3.0) ==
        doctest::Approx(lebesgue_norm(u, 3.0)).epsilon(1e-12));
  const SpaceTimeTrace empty;
  CHECK_THROWS_AS(strichartz_norm(empty, 4.0, 3.0), InputError);
  CHECK_THROWS_AS(strichartz_norm(tr, 0.5, 3.0), InputError);
  CHECK_THROWS_AS(strichartz_norm(tr, 4.0, 0.5), InputError);
}

TEST_CASE("Lorentz-in-time norm is equivalent to the Lebesgue one") {
  const RadialGrid g(16.0, 128);
  const SpaceTimeTrace tr = free_trace(g, 0.25, 2.25, 0.25);
  const double lorentz = lorentz_time_norm(tr, 4.0, 4.0, 3.0);
  const double lebesgue = strichartz_norm(tr, 4.0, 3.0);
  CHECK(lorentz > 0.0);
  CHECK(lorentz / lebesgue > 0.3);
  CHECK(lorentz / lebesgue < 3.0);

  const SpaceTimeTrace empty;
  CHECK_THROWS_AS(lorentz_time_norm(empty, 4.0, 4.0, 3.0), InputError);
  CHECK_THROWS_AS(lorentz_time_norm(tr, 0.5, 4.0, 3.0), InputError);
  SpaceTimeTrace flat;
  flat.times = {1.0, 1.0};
  flat.fields = {tr.fields[0], tr.fields[0]};
  CHECK_THROWS_AS(lorentz_time_norm(flat, 4.0, 4.0, 3.0), InputError);
}

TEST_CASE("local smoothing functional against a direct shell sum") {
  const RadialGrid g(16.0, 128);
  const RadialField u = standard_gaussian(g);
  SpaceTimeTrace tr;
  tr.a = 0.0;
  tr.b = 1.0;
  tr.times = {0.0, 1.0};
  tr.fields = {u, u};
  // sigma = 0, constant in time: sup_j 2^(-j/2) sqrt(window * ||shell_j u||^2).
  const int j_lo = static_cast<int>(std::ceil(std::log2(4.0 * g.dr())));
  const int j_hi = static_cast<int>(std::floor(std::log2(g.R))) - 1;
  double expect = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    double acc = 0.0;
    for (std::size_t m = 0; m < u.size(); ++m)
      acc += std::norm(u.g[m] * cutoff_weight(CutoffKind::Shell, j, g.r(m)));
    expect = std::max(expect, std::pow(2.0, -0.5 * j) *
                                  std::sqrt(4.0 * kPi * g.dr() * acc));
  }
  CHECK(local_smoothing_functional(tr, 0.0) == doctest::Approx(expect).epsilon(1e-12));
  const SpaceTimeTrace empty;
  CHECK_THROWS_AS(local_smoothing_functional(empty, 0.0), InputError);
}

TEST_CASE("dyadic sup-norm proxy against a direct band sum") {
  const RadialGrid g(16.0, 128);
  const RadialField u = corpus(g, 13, CorpusKind::GaussianMix);
  SpaceTimeTrace tr;
  tr.a = 0.0;
  tr.b = 0.0;
  tr.times = {0.0};
  tr.fields = {u};
  const double s = 0.5;
  const DyadicLadder ladder = make_ladder(g);
  const SpectralCoeffs c = dst_forward(u);
  double total = 0.0;
  for (int j = ladder.j_band_lo; j <= ladder.j_band_hi; ++j) {
    const double N = ladder.frequency(j);
    const double m = mass(dst_inverse(project_dyadic(c, N)));
    total += std::pow(N, 2.0 * s) * m;
  }
  CHECK(xs_proxy(tr, s) == doctest::Approx(std::sqrt(total)).epsilon(1e-12));
  CHECK_THROWS_AS(xs_proxy(tr, -0.1), InputError);
  CHECK_THROWS_AS(xs_proxy(tr, 2.5), InputError);
}

TEST_CASE("Hardy audit reproduces the Gaussian ratio") {
  const double closed_form = 2.0 / std::sqrt(3.0);
  for (std::size_t m : {std::size_t{256}, std::size_t{512}}) {
    const RadialGrid g(16.0, m);
    const AuditReport rep = audit_hardy(standard_gaussian(g), 2.0);
    CHECK(rep.ratio == doctest::Approx(closed_form).epsilon(0.02));
  }
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  CHECK_THROWS_AS(audit_hardy(u, 1.0), InputError);
  CHECK_THROWS_AS(audit_hardy(u, 3.0), InputError);
  CHECK(audit_hardy(RadialField(g), 2.0).ratio == 0.0);
}

TEST_CASE("interpolation audit obeys Cauchy-Schwarz") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  // Identity instance: both sides are || grad u ||_2.
  CHECK(audit_gagliardo_nirenberg(u, 1.0, 1.0, 2.0, 2.0, 2.0, 1.0).ratio == 1.0);
  // Half-derivative interpolation between L2 and the gradient.
  const AuditReport rep = audit_gagliardo_nirenberg(u, 0.5, 1.0, 2.0, 2.0, 2.0, 0.5);
  CHECK(rep.ratio <= 1.0 + 1e-12);
  CHECK(rep.ratio > 0.5);

  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 0.5, 1.0, 2.0, 2.0, 2.0, 0.0), InputError);
  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 1.0, 1.0, 2.0, 3.0, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 0.5, 1.0, 2.0, 2.0, 4.0, 0.5), InputError);
  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 1.2, 1.0, 2.0, 2.0, 2.0, 0.9), InputError);
  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 0.0, 1.0, 2.0, 2.0, 2.0, 0.5), InputError);
  CHECK_THROWS_AS(audit_gagliardo_nirenberg(u, 0.5, 1.0, 2.0, 2.0, 1.0, 0.5), InputError);
}

TEST_CASE("radial Sobolev audit: Gaussian identity instance and validation") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  // s=1/2, p=q=2, alpha=0, beta=-1/2: both sides equal sqrt(2 pi) for the
  // Gaussian, so the ratio is 1.
  // The weighted side's integrand r * f^2 has a nonzero slope at the origin,
  // so the quadrature converges at second order (measured ~3e-4 here).
  const AuditReport rep = audit_radial_sobolev(u, 0.5, 2.0, 2.0, 0.0, -0.5);
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-3));

  CHECK_THROWS_AS(audit_radial_sobolev(u, 3.0, 2.0, 2.0, 0.0, -0.5), InputError);
  // Scaling relation off by 0.1.
  CHECK_THROWS_AS(audit_radial_sobolev(u, 0.5, 2.0, 2.0, 0.0, -0.4), InputError);
  // Two admissibility equalities at once (p = 1 and q = infinity).
  CHECK_THROWS_AS(audit_radial_sobolev(u, 1.0, 1.0, kInfinity, 0.5, -1.5), InputError);
  // Weight outside the allowed range: alpha = -3/p' exactly.
  CHECK_THROWS_AS(audit_radial_sobolev(u, 0.5, 2.0, 2.0, -1.5, -0.5), InputError);
}

TEST_CASE("Schur audit stays under the geometric-series bound") {
  const std::vector<double> ones(8, 1.0);
  const double a_exp = 0.5;
  const AuditReport rep = audit_schur(ones, ones, a_exp);
  CHECK(rep.ratio <= 1.0 / (1.0 - std::pow(2.0, -a_exp)) + 1e-12);
  CHECK(rep.ratio > 1.0);
  CHECK_THROWS_AS(audit_schur(ones, ones, 0.0), InputError);
  CHECK_THROWS_AS(audit_schur(ones, std::vector<double>(7, 1.0), 0.5), InputError);
  CHECK_THROWS_AS(audit_schur({}, {}, 0.5), InputError);
}

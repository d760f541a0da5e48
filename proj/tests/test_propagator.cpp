/// Free propagator, quadrature oracle, vector field, pseudo-conformal
/// transform, and interpolation, each checked against a closed form.

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "nlslab/corpus.hpp"
#include "nlslab/dst.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/interp.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"

using namespace nlslab;

namespace {

double rel_l2(const RadialField& a, const RadialField& b) {
  return l2_norm(subtract(a, b)) / l2_norm(b);
}

}  // namespace

TEST_CASE("free flow of the Gaussian matches the closed form") {
  // exp(i t Delta / 2) exp(-r^2/2) = (1+it)^(-3/2) exp(-r^2 / (2(1+it))).
  const RadialGrid g(16.0, 512);
  const RadialField u = standard_gaussian(g);
  const double t = 0.7;
  const RadialField ut = free_propagate(u, t);
  const cx z(1.0, t);
  const cx amp = std::pow(z, -1.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < ut.size(); ++i) {
    const double r = g.r(i);
    const cx expect = r * amp * std::exp(-r * r / (2.0 * z));
    worst = std::max(worst, std::abs(ut.g[i] - expect));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("free flow is unitary, a group, and the identity at t = 0") {
  const RadialGrid g(16.0, 256);
  const RadialField u = corpus(g, 11, CorpusKind::GaussianMix);
  CHECK(std::abs(l2_norm(free_propagate(u, 0.7)) - l2_norm(u)) < 1e-12 * l2_norm(u));
  const RadialField two_steps = free_propagate(free_propagate(u, 0.3), 0.4);
  const RadialField one_step = free_propagate(u, 0.7);
  CHECK(rel_l2(two_steps, one_step) < 1e-12);
  const RadialField id = free_propagate(u, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(id.g[i] == u.g[i]);
}

TEST_CASE("direct kernel quadrature agrees with the spectral propagator") {
  const RadialGrid g(16.0, 512);
  const RadialField u = standard_gaussian(g);
  const double t = 0.7;
  CHECK(rel_l2(kernel_propagate(u, t), free_propagate(u, t)) < 1e-6);
  CHECK_THROWS_AS(kernel_propagate(u, 0.0), InputError);
}

TEST_CASE("vector field validation and s = 0 identity") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  const RadialField same = vector_field_J(u, 0.5, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(same.g[i] == u.g[i]);
  CHECK_THROWS_AS(vector_field_J(u, 0.0, 1.0), InputError);
  CHECK_THROWS_AS(vector_field_J(u, 0.5, -1.0), InputError);
}

TEST_CASE("pseudo-conformal transform is an involution") {
  const RadialGrid g(32.0, 1024);
  const RadialField u = standard_gaussian(g);
  const double t = 2.0;
  const ResampleResult once = pseudo_conformal(u, t);
  const ResampleResult back = pseudo_conformal(once.field, 1.0 / t);
  CHECK(rel_l2(back.field, u) < 1e-5);
  CHECK(once.truncation_loss < 1e-6);
  CHECK_THROWS_AS(pseudo_conformal(u, 0.0), InputError);
}

TEST_CASE("conjugate Fourier map fixes the Gaussian") {
  // The radial Fourier transform is self-dual on exp(-r^2/2), and the data is
  // real, so the final-data map leaves it invariant.
  const RadialGrid g(16.0, 512);
  const RadialField u = standard_gaussian(g);
  CHECK(rel_l2(conj_fourier_final_data(u), u) < 1e-7);
}

TEST_CASE("transformed free flow equals free flow of the final data") {
  const RadialGrid g(32.0, 1024);
  const RadialField u = standard_gaussian(g);
  const double t = 2.0;
  const RadialField lhs = pseudo_conformal(free_propagate(u, 1.0 / t), t).field;
  const RadialField rhs = free_propagate(conj_fourier_final_data(u), t);
  CHECK(rel_l2(lhs, rhs) < 1e-5);
}

TEST_CASE("resample reports truncation only when it reads past the edge") {
  const RadialGrid g(16.0, 256);
  const RadialField slow = sample_function(g, [](double r) { return cx(1.0 / (1.0 + r * r), 0.0); });
  const auto one = [](double) { return cx(1.0, 0.0); };
  const ResampleResult stretched = resample(slow, 1.1, one, cx(1.0, 0.0), false);
  CHECK(stretched.truncation_loss > 0.0);
  const ResampleResult squeezed = resample(slow, 0.9, one, cx(1.0, 0.0), false);
  CHECK(squeezed.truncation_loss == 0.0);
  CHECK_THROWS_AS(resample(slow, 0.0, one, cx(1.0, 0.0), false), InputError);
}

TEST_CASE("cubic spline reproduces linear data and vanishes outside its range") {
  const std::vector<double> xs{0.0, 0.5, 1.25, 2.0, 3.0};
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = 2.0 * xs[i] - 1.0;
  const CubicSpline s(xs, ys);
  for (double q : {0.1, 0.6, 1.0, 1.7, 2.9}) CHECK(std::abs(s(q) - (2.0 * q - 1.0)) < 1e-13);
  CHECK(s(-0.5) == 0.0);
  CHECK(s(3.5) == 0.0);
  CHECK_THROWS_AS(CubicSpline({0.0, 1.0}, {0.0, 1.0}), InputError);
  CHECK_THROWS_AS(CubicSpline({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), InputError);
  CHECK_THROWS_AS(CubicSpline({0.0, 1.0, 2.0}, {0.0, 1.0}), InputError);
}

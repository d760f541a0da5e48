/// Grid bookkeeping and the sine-transform pair, checked against a
/// quadratic-time transform oracle written out longhand.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "nlslab/dst.hpp"
#include "nlslab/grid.hpp"

using namespace nlslab;

namespace {

/// O(M^2) type-I sine sum: S[x]_j = 2 sum_{n=1}^{M-1} x_n sin(pi j n / M).
std::vector<cx> slow_sine_sum(const std::vector<cx>& x, std::size_t M) {
  std::vector<cx> out(x.size(), cx(0.0));
  for (std::size_t j = 1; j < M; ++j) {
    cx acc(0.0);
    for (std::size_t n = 1; n < M; ++n)
      acc += x[n - 1] * std::sin(kPi * static_cast<double>(j) * static_cast<double>(n) /
                                 static_cast<double>(M));
    out[j - 1] = 2.0 * acc;
  }
  return out;
}

RadialField deterministic_field(const RadialGrid& grid) {
  RadialField u(grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = static_cast<double>(i);
    u.g[i] = cx(std::sin(0.31 * x + 0.7), std::cos(0.17 * x) * 0.5);
  }
  return u;
}

}  // namespace

TEST_CASE("grid accessors and validation") {
  const RadialGrid g(32.0, 64);
  CHECK(g.nodes() == 63);
  CHECK(g.dr() == doctest::Approx(0.5));
  CHECK(g.r(0) == doctest::Approx(0.5));
  CHECK(g.r(62) == doctest::Approx(31.5));
  CHECK(g.k(0) == doctest::Approx(kPi / 32.0));
  CHECK(g.kmax() == doctest::Approx(63.0 * kPi / 32.0));
  CHECK_THROWS_AS(RadialGrid(32.0, 100), InputError);  // not a power of two
  CHECK_THROWS_AS(RadialGrid(32.0, 32), InputError);   // too coarse
  CHECK_THROWS_AS(RadialGrid(0.0, 64), InputError);
  CHECK_THROWS_AS(RadialGrid(-4.0, 128), InputError);
}

TEST_CASE("forward transform matches the quadratic-time oracle") {
  const RadialGrid g(8.0, 128);
  const RadialField u = deterministic_field(g);
  const SpectralCoeffs c = dst_forward(u);
  const std::vector<cx> s = slow_sine_sum(u.g, g.M);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(std::abs(c.b[i] - s[i] / static_cast<double>(g.M)) < 1e-12);
  }
}

TEST_CASE("inverse transform matches the quadratic-time oracle") {
  const RadialGrid g(8.0, 128);
  SpectralCoeffs c(g);
  for (std::size_t i = 0; i < c.size(); ++i)
    c.b[i] = cx(std::cos(0.2 * static_cast<double>(i)), std::sin(0.4 * static_cast<double>(i)));
  const RadialField u = dst_inverse(c);
  const std::vector<cx> s = slow_sine_sum(c.b, g.M);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(u.g[i] - s[i] / 2.0) < 1e-12);
}

TEST_CASE("round trip is the identity") {
  const RadialGrid g(16.0, 256);
  const RadialField u = deterministic_field(g);
  const RadialField back = dst_inverse(dst_forward(u));
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(back.g[i] - u.g[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("discrete Parseval identity") {
  const RadialGrid g(16.0, 256);
  const RadialField u = deterministic_field(g);
  const SpectralCoeffs c = dst_forward(u);
  double phys = 0.0, spec = 0.0;
  for (const cx& v : u.g) phys += std::norm(v);
  for (const cx& v : c.b) spec += std::norm(v);
  phys *= 4.0 * kPi * g.dr();
  spec *= 2.0 * kPi * g.R;
  CHECK(std::abs(phys - spec) / phys < 1e-12);
}

TEST_CASE("cosine series reproduces the exact derivative of a pure mode") {
  const RadialGrid g(8.0, 128);
  // g(r) = sin(k_5 r): single coefficient; derivative k_5 cos(k_5 r).
  SpectralCoeffs c(g);
  c.b[4] = cx(1.0, 0.0);
  std::vector<cx> scaled(c.size(), cx(0.0));
  scaled[4] = c.b[4] * g.k(4);
  const std::vector<cx> deriv = cosine_series_eval(g, scaled);
  for (std::size_t i = 0; i < deriv.size(); ++i) {
    const double expect = g.k(4) * std::cos(g.k(4) * g.r(i));
    CHECK(std::abs(deriv[i] - expect) < 1e-12);
  }
}

TEST_CASE("length mismatches are rejected") {
  const RadialGrid g(8.0, 128);
  RadialField u(g);
  u.g.resize(10);
  CHECK_THROWS_AS(dst_forward(u), InputError);
  SpectralCoeffs c(g);
  c.b.resize(10);
  CHECK_THROWS_AS(dst_inverse(c), InputError);
  CHECK_THROWS_AS(cosine_series_eval(g, std::vector<cx>(10)), InputError);
}

TEST_CASE("sample_function stores r*f(r) and rejects non-finite samples") {
  const RadialGrid g(8.0, 128);
  const RadialField u = sample_function(g, [](double r) { return cx(std::exp(-r), 0.0); });
  for (std::size_t i = 0; i < u.size(); ++i)
    CHECK(std::abs(u.g[i] - g.r(i) * std::exp(-g.r(i))) < 1e-15);
  const double bad_at = g.r(3);
  CHECK_THROWS_AS(sample_function(g, [bad_at](double r) { return cx(1.0 / (r - bad_at), 0.0); }),
                  InputError);
}

TEST_CASE("boundary leakage flags outer-node mass") {
  const RadialGrid g(8.0, 128);
  RadialField decaying = sample_function(g, [](double r) { return cx(std::exp(-r * r), 0.0); });
  CHECK(boundary_leakage(decaying) < 1e-20);
  RadialField flat(g);
  for (std::size_t i = 0; i < flat.size(); ++i) flat.g[i] = cx(1.0, 0.0);
  CHECK(boundary_leakage(flat) == doctest::Approx(1.0));

  std::vector<std::string> sink;
  check_decay(flat, 1e-6, &sink);
  CHECK(!sink.empty());
  sink.clear();
  check_decay(decaying, 1e-6, &sink);
  CHECK(sink.empty());
}

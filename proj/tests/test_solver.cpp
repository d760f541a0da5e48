/// Split-step integrator invariants: exact mass conservation, reversibility,
/// second-order accuracy, and the equivalence of the two model flows under
/// the pseudo-conformal transform.

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlslab/corpus.hpp"
#include "nlslab/field_ops.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/propagator.hpp"
#include "nlslab/solver.hpp"

using namespace nlslab;

namespace {

double rel_l2(const RadialField& a, const RadialField& b) {
  return l2_norm(subtract(a, b)) / l2_norm(b);
}

}  // namespace

TEST_CASE("both phase substeps preserve mass exactly") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  const double m0 = mass(u);
  CHECK(std::abs(mass(step_autonomous(u, 1e-3)) - m0) < 1e-13 * m0);
  CHECK(std::abs(mass(step_nonautonomous(u, 1.0, 1e-3)) - m0) < 1e-13 * m0);
}

TEST_CASE("steps are time reversible") {
  const RadialGrid g(16.0, 256);
  const RadialField u = corpus(g, 21, CorpusKind::GaussianMix);
  const RadialField back_a = step_autonomous(step_autonomous(u, 1e-3), -1e-3);
  CHECK(rel_l2(back_a, u) < 1e-11);
  const RadialField back_n =
      step_nonautonomous(step_nonautonomous(u, 1.0, 1e-3), 1.0 + 1e-3, -1e-3);
  CHECK(rel_l2(back_n, u) < 1e-11);
}

TEST_CASE("disabling the nonlinearity reduces a step to the free flow") {
  const RadialGrid g(16.0, 256);
  const RadialField u = corpus(g, 4, CorpusKind::GaussianMix);
  const double dt = 2e-3;
  CHECK(rel_l2(step_autonomous(u, dt, false), free_propagate(u, dt)) < 1e-12);
  CHECK(rel_l2(step_nonautonomous(u, 0.5, dt, false), free_propagate(u, dt)) < 1e-12);
}

TEST_CASE("step validation") {
  const RadialGrid g(16.0, 256);
  const RadialField u = standard_gaussian(g);
  CHECK_THROWS_AS(step_nonautonomous(u, 0.5, -1.0), InputError);   // lands at t < 0
  CHECK_THROWS_AS(step_nonautonomous(u, -0.2, 0.1), InputError);   // starts at t < 0
  CHECK_THROWS_AS(step_nonautonomous(u, 0.0, 1e-3), InputError);   // starts at t = 0
}

TEST_CASE("splitting error halves twice when the step halves") {
  SolverConfig cfg;
  cfg.grid = RadialGrid(16.0, 256);
  cfg.stride = 1u << 30;  // endpoints only
  const RadialField u0 = standard_gaussian(cfg.grid);
  const double t_end = 0.5;
  const double dt_coarse = 4e-3;

  const auto endpoint = [&](double dt) {
    SolverConfig c = cfg;
    c.dt = dt;
    return evolve(c, u0, Equation::Autonomous, 0.0, t_end).final_field;
  };
  const RadialField ref = endpoint(dt_coarse / 80.0);
  const double e_coarse = l2_norm(subtract(endpoint(dt_coarse), ref));
  const double e_half = l2_norm(subtract(endpoint(dt_coarse / 2.0), ref));
  const double ratio = e_coarse / e_half;
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("evolve validates its configuration") {
  SolverConfig cfg;
  cfg.grid = RadialGrid(16.0, 256);
  const RadialField u = standard_gaussian(cfg.grid);
  const RadialField other = standard_gaussian(RadialGrid(16.0, 128));

  CHECK_THROWS_AS(evolve(cfg, other, Equation::Autonomous, 0.0, 1.0), InputError);
  SolverConfig bad_dt = cfg;
  bad_dt.dt = 0.0;
  CHECK_THROWS_AS(evolve(bad_dt, u, Equation::Autonomous, 0.0, 1.0), InputError);
  SolverConfig bad_stride = cfg;
  bad_stride.stride = 0;
  CHECK_THROWS_AS(evolve(bad_stride, u, Equation::Autonomous, 0.0, 1.0), InputError);
  CHECK_THROWS_AS(evolve(cfg, u, Equation::Autonomous, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(evolve(cfg, u, Equation::Nonautonomous, -1.0, 1.0), InputError);
  CHECK_THROWS_AS(evolve(cfg, u, Equation::Nonautonomous, 1.0, 0.0), InputError);
  CHECK_THROWS_AS(evolve(cfg, u, Equation::Autonomous, 0.0, 1.0, &other), InputError);
  SolverConfig geo = cfg;
  geo.schedule = StepSchedule::Geometric;
  CHECK_THROWS_AS(evolve(geo, u, Equation::Autonomous, 0.0, 1.0), InputError);
}

TEST_CASE("evolve hits the requested endpoint exactly") {
  SolverConfig cfg;
  cfg.grid = RadialGrid(16.0, 128);
  cfg.dt = 1e-3;
  cfg.stride = 7;
  const RadialField u = standard_gaussian(cfg.grid);
  const EvolveResult res = evolve(cfg, u, Equation::Autonomous, 0.0, 0.3);
  CHECK(res.trace.times.back() == 0.3);
  CHECK(res.energy.rows.back().t == 0.3);
  CHECK(res.trace.times.size() == res.energy.rows.size());
}

TEST_CASE("tracking a linear part stores the difference snapshots") {
  SolverConfig cfg;
  cfg.grid = RadialGrid(16.0, 256);
  cfg.dt = 1e-3;
  cfg.stride = 10;
  const RadialField u0 = standard_gaussian(cfg.grid);
  const RadialField vp = scale(corpus(cfg.grid, 2, CorpusKind::GaussianMix), cx(0.1, 0.0));
  const EvolveResult res = evolve(cfg, u0, Equation::Nonautonomous, 4.0, 3.9, &vp);
  REQUIRE(res.trace.has_aux());
  CHECK(res.trace.aux.size() == res.trace.fields.size());
  const RadialField w0 = subtract(u0, free_propagate(vp, 4.0));
  CHECK(l2_norm(subtract(res.trace.aux.front(), w0)) < 1e-12);
}

TEST_CASE("a non-finite state is reported as a step failure") {
  SolverConfig cfg;
  cfg.grid = RadialGrid(16.0, 128);
  RadialField u = standard_gaussian(cfg.grid);
  u.g[5] = cx(std::nan(""), 0.0);
  CHECK_THROWS_AS(evolve(cfg, u, Equation::Autonomous, 0.0, 0.1), Error);
}

TEST_CASE("the two flows are conjugate under the pseudo-conformal transform") {
  // If u solves the autonomous equation on [1/2, 2] then its transform
  // U(s) = pc(u(1/s), s) solves the nonautonomous one on the same window.
  SolverConfig cfg;
  cfg.grid = RadialGrid(32.0, 1024);
  cfg.dt = 2e-3;
  cfg.stride = 1u << 30;
  const RadialField gauss = standard_gaussian(cfg.grid);

  const RadialField u2 = evolve(cfg, gauss, Equation::Autonomous, 0.5, 2.0).final_field;
  const RadialField U2 = pseudo_conformal(gauss, 2.0).field;
  const RadialField Uhalf = evolve(cfg, U2, Equation::Nonautonomous, 2.0, 0.5).final_field;
  const RadialField ref = pseudo_conformal(u2, 0.5).field;
  CHECK(rel_l2(Uhalf, ref) < 1e-5);
}

TEST_CASE("increment check on a trace with zero difference field") {
  const RadialGrid g(16.0, 128);
  const RadialField u = standard_gaussian(g);
  SpaceTimeTrace tr;
  tr.a = 1.0;
  tr.b = 1.4;
  tr.times = {1.0, 1.1, 1.2, 1.3, 1.4};
  for (double t : tr.times) {
    (void)t;
    tr.fields.push_back(u);
    tr.aux.push_back(RadialField(g));
  }
  const IncrementReport rep = energy_increment_check(tr);
  // W = 0 makes both candidates coincide; the finite differences vanish.
  CHECK(rep.residual_minus < 1e-10);
  CHECK(rep.residual_plus < 1e-10);
  CHECK(rep.winner == -0.5);
  CHECK(rep.times.size() == tr.times.size() - 2);
  CHECK(rep.e_running.size() == rep.times.size());
}

TEST_CASE("increment check validation") {
  const RadialGrid g(16.0, 128);
  const RadialField u = standard_gaussian(g);
  SpaceTimeTrace no_aux;
  no_aux.times = {1.0, 1.1, 1.2};
  no_aux.fields = {u, u, u};
  CHECK_THROWS_AS(energy_increment_check(no_aux), InputError);

  SpaceTimeTrace two;
  two.times = {1.0, 1.1};
  two.fields = {u, u};
  two.aux = {u, u};
  CHECK_THROWS_AS(energy_increment_check(two), InputError);

  SpaceTimeTrace nonpositive;
  nonpositive.times = {0.0, 0.1, 0.2};
  nonpositive.fields = {u, u, u};
  nonpositive.aux = {u, u, u};
  CHECK_THROWS_AS(energy_increment_check(nonpositive), InputError);
}

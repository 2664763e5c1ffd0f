#include <doctest.h>

#include <cmath>

#include "isingq/demos.hpp"

using namespace isingq;

TEST_CASE("analytic barrier transmission: pinned values and limits") {
  // E/V0 = 0.5, kappa w = 2: T = 1/(1 + sinh^2 2)
  const double pinned = 1.0 / (1.0 + std::pow(3.626860407847019, 2));
  CHECK(barrier_transmission_analytic(0.5, 1.0, 2.0, 1.0) ==
        doctest::Approx(pinned).epsilon(1e-14));
  CHECK(barrier_transmission_analytic(0.5, 0.0, 2.0, 1.0) == 1.0);
  // continuity across E = V0
  const double below = barrier_transmission_analytic(1.0 - 1e-8, 1.0, 2.0, 1.0);
  const double above = barrier_transmission_analytic(1.0 + 1e-8, 1.0, 2.0, 1.0);
  const double at = barrier_transmission_analytic(1.0, 1.0, 2.0, 1.0);
  CHECK(std::abs(below - at) < 1e-6);
  CHECK(std::abs(above - at) < 1e-6);
  // monotone decrease with width in the tunneling regime
  CHECK(barrier_transmission_analytic(0.5, 1.0, 3.0, 1.0) < pinned);
}

TEST_CASE("two-state run tracks the closed-form solution") {
  const TwoStateResult run = run_two_state({});
  CHECK(run.max_error < 1e-10);
  CHECK(run.times.size() == run.p0.size());
  // p0 + p1 = 1
  for (size_t i = 0; i < run.p0.size(); ++i) {
    CHECK(run.q0[i] * run.q0[i] + run.q1[i] * run.q1[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("free propagation smoke run transmits everything") {
  TunnelingConfig cfg;
  cfg.sites = 512;
  cfg.length = 250.0;
  cfg.barrier_center = 125.0;
  cfg.barrier_height = 0.0;
  cfg.packet_center = 60.0;
  cfg.packet_width = 10.0;
  cfg.t_final = 120.0;
  cfg.dt = 0.5;
  const TunnelingResult run = run_tunneling(cfg);
  CHECK(run.transmission == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(run.norm_drift < 1e-9);
  CHECK(run.frames.size() == 9);
}

TEST_CASE("double slit rejects overlapping slit geometry") {
  DoubleSlitConfig cfg;
  cfg.slit_separation_cells = 2;
  cfg.slit_width_cells = 10;
  CHECK_THROWS(run_double_slit(cfg));
}

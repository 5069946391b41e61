// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frachz/loop.hpp"
#include "frachz/registry.hpp"

using namespace frachz;

namespace {

ControllerSpec zero_gains(Structure s) {
  std::vector<double> v(parameter_names(s).size(), 0.0);
  return ControllerSpec::from_vector(s, v);
}

}  // namespace

TEST_CASE("scenario validation and defaults") {
  CHECK_NOTHROW(validate(Scenario{}));
  Scenario bad;
  bad.horizon = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  Scenario late;
  late.disturbance_time = 50.0;
  CHECK_THROWS_AS(validate(late), std::invalid_argument);

  CHECK(default_scenario("gp2", true).horizon == 60.0);
  CHECK(*default_scenario("gp2", true).disturbance_time == 30.0);
  CHECK(default_scenario("gp1", false).horizon == 40.0);
  CHECK_FALSE(default_scenario("gp3", false).disturbance_time.has_value());
  CHECK(default_loop_settings("gp1").ops.dt == 0.005);
  CHECK(default_loop_settings("gp3").ops.dt == 0.01);
  CHECK(uss_mode_from_name("zero") == UssMode::kZero);
  CHECK(uss_mode_name(UssMode::kDc) == "dc");
  CHECK_THROWS_AS(uss_mode_from_name("mean"), std::invalid_argument);
}

TEST_CASE("rest stays at rest") {
  Scenario sc;
  sc.setpoint_mag = 0.0;
  const auto tr = simulate(plant_preset("gp1"), published_row("gp1", Structure::kFuzzyPID).spec(),
                           sc, default_loop_settings("gp1"));
  CHECK(tr.stable);
  CHECK(tr.size() == 8000);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    CHECK(tr.y[i] == 0.0);
    CHECK(tr.u[i] == 0.0);
  }
}

TEST_CASE("trajectory bookkeeping") {
  const auto settings = default_loop_settings("gp2");
  const auto sc = default_scenario("gp2", true);
  const auto tr = simulate(plant_preset("gp2"),
                           published_row("gp2", Structure::kFuzzyPDplusI).spec(),
                           sc, settings);
  REQUIRE(tr.stable);
  REQUIRE(tr.size() == 6000);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    CHECK(tr.e[i] == tr.r[i] - tr.y[i]);
    CHECK(tr.t[i] == doctest::Approx(i * 0.01));
  }
  CHECK(std::abs(tr.y[2999] - 1.0) < 0.05);
  const double peak = *std::max_element(tr.y.begin(), tr.y.begin() + 3000);
  CHECK(peak < 2.0);
  CHECK(std::abs(tr.y.back() - 1.0) < 0.05);
}

TEST_CASE("published gp1 fuzzy PID tracks") {
  const auto sc = default_scenario("gp1", true);
  const auto tr = simulate(plant_preset("gp1"),
                           published_row("gp1", Structure::kFuzzyPID).spec(), sc,
                           default_loop_settings("gp1"));
  REQUIRE(tr.stable);
  for (double y : tr.y) CHECK(std::abs(y) <= 2.0);
  const auto n_dist = static_cast<std::size_t>(20.0 / 0.005);
  CHECK(std::abs(tr.y[n_dist - 1] - 1.0) < 0.05);
}

TEST_CASE("index quadrature") {
  Trajectory tr;
  tr.dt = 0.001;
  for (int n = 0; n < 3000; ++n) {
    const double t = n * tr.dt;
    tr.t.push_back(t);
    tr.r.push_back(1.0);
    tr.e.push_back(t < 1.0 ? 1.0 : 0.0);
    tr.u.push_back(1.0);
    tr.y.push_back(1.0 - tr.e.back());
  }
  Scenario sc;
  sc.horizon = 3.0;
  const auto rep = compute_indices(tr, sc, LoopSettings{});
  CHECK(rep.istse_setpoint == doctest::Approx(1.0 / 3.0).epsilon(2e-3));
  CHECK(rep.isdco_setpoint == 0.0);
  CHECK(rep.istse_load == 0.0);
  CHECK(rep.u_ss == 1.0);

  LoopSettings zero;
  zero.uss_mode = UssMode::kZero;
  zero.w1 = 2.0;
  zero.w2 = 0.5;
  const auto rz = compute_indices(tr, sc, zero);
  CHECK(rz.isdco_setpoint == doctest::Approx(3.0));
  CHECK(rz.weighted == doctest::Approx(2.0 * rz.istse_setpoint + 0.5 * 3.0));
}

TEST_CASE("disturbance window re-zeroes time") {
  Trajectory tr;
  tr.dt = 0.001;
  for (int n = 0; n < 4000; ++n) {
    const double t = n * tr.dt;
    tr.t.push_back(t);
    tr.r.push_back(1.0);
    tr.e.push_back(t >= 2.0 && t < 3.0 ? 1.0 : 0.0);
    tr.u.push_back(1.0);
    tr.y.push_back(1.0 - tr.e.back());
  }
  Scenario sc;
  sc.horizon = 4.0;
  sc.disturbance_time = 2.0;
  const auto rep = compute_indices(tr, sc, LoopSettings{});
  CHECK(rep.istse_setpoint == 0.0);
  CHECK(rep.istse_load == doctest::Approx(1.0 / 3.0).epsilon(2e-3));
}

TEST_CASE("open loop with zero gains") {
  for (auto mode : {UssMode::kZero, UssMode::kDc}) {
    auto settings = default_loop_settings("gp2");
    settings.uss_mode = mode;
    const auto sc = default_scenario("gp2", false);
    const double j =
        evaluate_candidate(plant_preset("gp2"),
                           zero_gains(Structure::kFuzzyPDplusI), sc, settings);
    const double h = sc.horizon;
    const double expected =
        h * h * h / 3.0 + (mode == UssMode::kDc ? h * 0.2 * 0.2 : 0.0);
    CHECK(j == doctest::Approx(expected).epsilon(1e-3));
  }
}

TEST_CASE("penalty for divergence") {
  auto settings = default_loop_settings("gp2");
  const auto sc = default_scenario("gp2", false);
  const auto wild = ControllerSpec::from_vector(
      Structure::kFuzzyPDplusI,
      std::vector<double>{1.0, 0.0, 40.0, 40.0, 2.0, 0.0});
  const auto tr = simulate(plant_preset("gp2"), wild, sc, settings);
  CHECK_FALSE(tr.stable);
  CHECK(tr.size() < 6000);
  CHECK(evaluate_candidate(plant_preset("gp2"), wild, sc, settings) == kPenalty);

  const double ok = evaluate_candidate(
      plant_preset("gp1"), published_row("gp1", Structure::kFuzzyPID).spec(),
      default_scenario("gp1", false), default_loop_settings("gp1"));
  CHECK(ok < kPenalty);
  CHECK(ok > 0.0);
}

TEST_CASE("windows, symmetry and dt convergence") {
  const auto row = published_row("gp2", Structure::kFuzzyPplusID);
  const auto plant = plant_preset("gp2");
  const auto settings = default_loop_settings("gp2");
  auto sc = default_scenario("gp2", true);

  const auto base = compute_indices(simulate(plant, row.spec(), sc, settings), sc,
                                    settings);
  auto heavier = sc;
  heavier.disturbance_mag = 3.0;
  const auto rh = compute_indices(simulate(plant, row.spec(), heavier, settings),
                                  heavier, settings);
  CHECK(rh.istse_setpoint == base.istse_setpoint);
  CHECK(rh.isdco_setpoint == base.isdco_setpoint);
  CHECK(rh.istse_load > base.istse_load);

  auto negated = sc;
  negated.setpoint_mag = -1.0;
  negated.disturbance_mag = -1.0;
  const auto tn = simulate(plant, row.spec(), negated, settings);
  const auto tp = simulate(plant, row.spec(), sc, settings);
  for (std::size_t i = 0; i < tp.size(); ++i) {
    CHECK(tn.y[i] == -tp.y[i]);
    CHECK(tn.u[i] == -tp.u[i]);
  }
  const auto rn = compute_indices(tn, negated, settings);
  CHECK(rn.istse_setpoint == doctest::Approx(base.istse_setpoint));
  CHECK(rn.isdco_setpoint == doctest::Approx(base.isdco_setpoint));
  CHECK(rn.istse_load == doctest::Approx(base.istse_load));

  auto fine = settings;
  fine.ops.dt = settings.ops.dt / 2.0;
  const auto rf = compute_indices(simulate(plant, row.spec(), sc, fine), sc, fine);
  CHECK(rf.istse_setpoint == doctest::Approx(base.istse_setpoint).epsilon(0.02));
  CHECK(rf.isdco_setpoint == doctest::Approx(base.isdco_setpoint).epsilon(0.02));
  CHECK(rf.istse_load == doctest::Approx(base.istse_load).epsilon(0.02));
}

TEST_CASE("streaming evaluation equals stored trajectory") {
  const auto row = published_row("gp3", Structure::kFuzzyPIplusD);
  const auto settings = default_loop_settings("gp3");
  const auto sc = default_scenario("gp3", true);
  const auto plant = plant_preset("gp3");
  const auto a = compute_indices(simulate(plant, row.spec(), sc, settings), sc,
                                 settings);
  const auto b = evaluate_indices(plant, row.spec(), sc, settings);
  CHECK(b.stable);
  CHECK(a.istse_setpoint == b.indices.istse_setpoint);
  CHECK(a.isdco_setpoint == b.indices.isdco_setpoint);
  CHECK(a.istse_load == b.indices.istse_load);
}

TEST_CASE("actuator limit is honoured in the loop") {
  auto settings = default_loop_settings("gp1");
  settings.actuator_limit = 1.5;
  const auto tr = simulate(plant_preset("gp1"),
                           published_row("gp1", Structure::kFuzzyPplusID).spec(),
                           default_scenario("gp1", true), settings);
  for (double u : tr.u) CHECK(std::abs(u) <= 1.5);
}

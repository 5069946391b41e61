// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/loop.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace frachz {

void validate(const Scenario& sc) {
  if (!(sc.horizon > sc.setpoint_time) || !std::isfinite(sc.horizon)) {
    throw std::invalid_argument("scenario: horizon must exceed setpoint_time");
  }
  if (sc.setpoint_time < 0.0) {
    throw std::invalid_argument("scenario: setpoint_time must be >= 0");
  }
  if (sc.disturbance_time && !(*sc.disturbance_time > sc.setpoint_time &&
                               *sc.disturbance_time < sc.horizon)) {
    throw std::invalid_argument(
        "scenario: disturbance_time must lie in (setpoint_time, horizon)");
  }
  if (!std::isfinite(sc.setpoint_mag) || !std::isfinite(sc.disturbance_mag)) {
    throw std::invalid_argument("scenario: magnitudes must be finite");
  }
}

std::string_view uss_mode_name(UssMode m) {
  return m == UssMode::kDc ? "dc" : "zero";
}

UssMode uss_mode_from_name(std::string_view name) {
  if (name == "dc") return UssMode::kDc;
  if (name == "zero") return UssMode::kZero;
  throw std::invalid_argument("unknown u_ss mode '" + std::string(name) + "'");
}

LoopSettings default_loop_settings(std::string_view preset) {
  LoopSettings s;
  s.ops.dt = preset == "gp1" ? 0.005 : 0.01;
  return s;
}

Scenario default_scenario(std::string_view preset, bool with_disturbance) {
  Scenario sc;
  sc.horizon = preset == "gp2" ? 60.0 : 40.0;
  if (with_disturbance) sc.disturbance_time = sc.horizon / 2.0;
  return sc;
}

namespace {

std::size_t sample_index(double time, double dt) {
  return static_cast<std::size_t>(std::llround(time / dt));
}

// Runs the loop and hands every recorded sample to `sink(n, t, r, e, u, y)`.
// Returns false when the run diverged.
template <typename Sink>
bool run_loop(const PlantModel& plant, const ControllerSpec& spec,
              const Scenario& sc, const LoopSettings& settings, Sink&& sink) {
  validate(sc);
  const double dt = settings.ops.dt;
  Controller ctl(spec, settings.ops, default_engine(), settings.actuator_limit);
  PlantRealization proc(plant, settings.ops);

  const std::size_t n_total = sample_index(sc.horizon, dt);
  const std::size_t n_sp = sample_index(sc.setpoint_time, dt);
  const std::size_t n_dist = sc.disturbance_time
                                 ? sample_index(*sc.disturbance_time, dt)
                                 : n_total;

  for (std::size_t n = 0; n < n_total; ++n) {
    const double t = static_cast<double>(n) * dt;
    const double r = n >= n_sp ? sc.setpoint_mag : 0.0;
    const double y = proc.output();
    const double e = r - y;
    const double u = ctl.step(e, y);
    if (!std::isfinite(u)) return false;
    sink(n, t, r, e, u, y);
    const double d = n >= n_dist ? sc.disturbance_mag : 0.0;
    const double y_next = proc.step(u + d);
    if (!std::isfinite(y_next) ||
        std::abs(y_next) > settings.divergence_limit) {
      return false;
    }
  }
  return true;
}

double steady_control(const Scenario& sc, const LoopSettings& settings,
                      double plant_gain) {
  return settings.uss_mode == UssMode::kDc ? sc.setpoint_mag / plant_gain
                                           : 0.0;
}

// Left-rectangle accumulation of the three indices.
struct IndexAccumulator {
  double dt;
  double u_ss;
  std::size_t n_sp;
  std::size_t n_dist;
  double t_sp;
  double t_dist;
  double istse_sp = 0.0;
  double isdco_sp = 0.0;
  double istse_ld = 0.0;

  void add(std::size_t n, double t, double e, double u) {
    if (n < n_sp) return;
    if (n < n_dist) {
      const double tau = t - t_sp;
      istse_sp += tau * tau * e * e * dt;
      isdco_sp += (u - u_ss) * (u - u_ss) * dt;
    } else {
      const double tau = t - t_dist;
      istse_ld += tau * tau * e * e * dt;
    }
  }

  IndexReport report(const LoopSettings& settings) const {
    IndexReport rep;
    rep.istse_setpoint = istse_sp;
    rep.isdco_setpoint = isdco_sp;
    rep.istse_load = istse_ld;
    rep.w1 = settings.w1;
    rep.w2 = settings.w2;
    rep.weighted = settings.w1 * istse_sp + settings.w2 * isdco_sp;
    rep.uss_mode = settings.uss_mode;
    rep.u_ss = u_ss;
    return rep;
  }
};

IndexAccumulator make_accumulator(const Scenario& sc,
                                  const LoopSettings& settings, double dt,
                                  double plant_gain) {
  const std::size_t n_total = sample_index(sc.horizon, dt);
  IndexAccumulator acc{dt,
                       steady_control(sc, settings, plant_gain),
                       sample_index(sc.setpoint_time, dt),
                       sc.disturbance_time
                           ? sample_index(*sc.disturbance_time, dt)
                           : n_total,
                       0.0,
                       0.0};
  acc.t_sp = static_cast<double>(acc.n_sp) * dt;
  acc.t_dist = static_cast<double>(acc.n_dist) * dt;
  return acc;
}

}  // namespace

Trajectory simulate(const PlantModel& plant, const ControllerSpec& spec,
                    const Scenario& sc, const LoopSettings& settings) {
  Trajectory tr;
  tr.dt = settings.ops.dt;
  tr.plant_gain = plant.gain;
  const std::size_t n = sample_index(sc.horizon, settings.ops.dt);
  for (auto* v : {&tr.t, &tr.r, &tr.e, &tr.u, &tr.y}) v->reserve(n);
  tr.stable = run_loop(plant, spec, sc, settings,
                       [&](std::size_t, double t, double r, double e, double u,
                           double y) {
                         tr.t.push_back(t);
                         tr.r.push_back(r);
                         tr.e.push_back(e);
                         tr.u.push_back(u);
                         tr.y.push_back(y);
                       });
  return tr;
}

IndexReport compute_indices(const Trajectory& tr, const Scenario& sc,
                            const LoopSettings& settings) {
  auto acc = make_accumulator(sc, settings, tr.dt, tr.plant_gain);
  for (std::size_t n = 0; n < tr.size(); ++n) {
    acc.add(n, tr.t[n], tr.e[n], tr.u[n]);
  }
  return acc.report(settings);
}

Evaluation evaluate_indices(const PlantModel& plant,
                            const ControllerSpec& spec, const Scenario& sc,
                            const LoopSettings& settings) {
  auto acc = make_accumulator(sc, settings, settings.ops.dt, plant.gain);
  Evaluation ev;
  ev.stable = run_loop(plant, spec, sc, settings,
                       [&](std::size_t n, double t, double, double e, double u,
                           double) { acc.add(n, t, e, u); });
  ev.indices = acc.report(settings);
  return ev;
}

double evaluate_candidate(const PlantModel& plant, const ControllerSpec& spec,
                          const Scenario& sc, const LoopSettings& settings) {
  const Evaluation ev = evaluate_indices(plant, spec, sc, settings);
  if (!ev.stable || !std::isfinite(ev.indices.weighted)) return kPenalty;
  return ev.indices.weighted;
}

}  // namespace frachz

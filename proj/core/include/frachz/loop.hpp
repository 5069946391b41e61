// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "frachz/controllers.hpp"
#include "frachz/plant.hpp"

namespace frachz {

/// Fitness assigned to unstable candidates.
inline constexpr double kPenalty = 1e10;

/// Set-point and optional load-disturbance steps. The disturbance is added
/// to the plant input.
struct Scenario {
  double horizon = 40.0;
  double setpoint_time = 0.0;
  double setpoint_mag = 1.0;
  std::optional<double> disturbance_time;
  double disturbance_mag = 1.0;
};

void validate(const Scenario& sc);

/// Steady control value subtracted in the control-deviation index.
enum class UssMode {
  kDc,    // setpoint_mag / K
  kZero,  // 0
};

std::string_view uss_mode_name(UssMode m);
UssMode uss_mode_from_name(std::string_view name);

struct LoopSettings {
  OperatorSettings ops{};
  UssMode uss_mode = UssMode::kDc;
  double w1 = 1.0;
  double w2 = 1.0;
  /// |y| above this counts as instability.
  double divergence_limit = 1e3;
  std::optional<double> actuator_limit;
};

/// Defaults per plant preset: dt 0.005 s for gp1, 0.01 s otherwise.
LoopSettings default_loop_settings(std::string_view preset);

/// Horizons 40 s (gp1, gp3) and 60 s (gp2). With `with_disturbance` the load
/// step lands at half the horizon; otherwise the whole run is the set-point
/// window used for tuning.
Scenario default_scenario(std::string_view preset, bool with_disturbance);

struct Trajectory {
  double dt = 0.0;
  double plant_gain = 1.0;
  std::vector<double> t, r, e, u, y;
  bool stable = true;

  std::size_t size() const { return t.size(); }
};

struct IndexReport {
  double istse_setpoint = 0.0;  // J1
  double isdco_setpoint = 0.0;  // J2
  double istse_load = 0.0;      // J3, zero without a disturbance
  double weighted = 0.0;        // w1 J1 + w2 J2
  double w1 = 1.0;
  double w2 = 1.0;
  UssMode uss_mode = UssMode::kDc;
  double u_ss = 0.0;
};

/// Sample-by-sample closed loop: read y, form e, step the controller, add
/// the disturbance, step the plant. Stops early (stable = false) when a
/// value turns non-finite or |y| exceeds the divergence limit.
Trajectory simulate(const PlantModel& plant, const ControllerSpec& spec,
                    const Scenario& sc, const LoopSettings& settings);

IndexReport compute_indices(const Trajectory& tr, const Scenario& sc,
                            const LoopSettings& settings);

/// w1 ISTSE + w2 ISDCO over the set-point window, or kPenalty if unstable.
double evaluate_candidate(const PlantModel& plant, const ControllerSpec& spec,
                          const Scenario& sc, const LoopSettings& settings);

/// Index report without storing the trajectory; `stable` tells whether the
/// run finished. Used by the tuners.
struct Evaluation {
  IndexReport indices;
  bool stable = true;
};
Evaluation evaluate_indices(const PlantModel& plant,
                            const ControllerSpec& spec, const Scenario& sc,
                            const LoopSettings& settings);

}  // namespace frachz

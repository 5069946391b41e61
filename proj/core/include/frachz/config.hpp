// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frachz/controllers.hpp"
#include "frachz/design.hpp"
#include "frachz/loop.hpp"
#include "frachz/plant.hpp"
#include "frachz/tuner.hpp"

namespace frachz {

/// Thrown for malformed or invalid configuration; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Controller spec:
//   {"structure": "fuzzy-pid", "parameters": {"K_e": 0.88, ...}}
nlohmann::json to_json(const ControllerSpec& spec);
ControllerSpec controller_from_json(const nlohmann::json& j);

// Scenario:
//   {"horizon": 40, "setpoint_time": 0, "setpoint_mag": 1,
//    "disturbance_time": 20, "disturbance_mag": 1}
nlohmann::json to_json(const Scenario& sc);
Scenario scenario_from_json(const nlohmann::json& j,
                            Scenario defaults = Scenario{});

// Plant: a preset name ("gp1") or {"K": 1, "T": 1.11, "alpha": 1.5, "L": 0.105}
nlohmann::json to_json(const PlantModel& m);
PlantModel plant_from_json(const nlohmann::json& j);

/// Loop settings block:
///   {"dt": 0.01, "band": [0.01, 100], "filter_order": 2,
///    "discretization": "tustin", "uss_mode": "dc", "weights": [1, 1],
///    "divergence_limit": 1000, "actuator_limit": 5}
LoopSettings loop_settings_from_json(const nlohmann::json& j,
                                     LoopSettings defaults);
nlohmann::json to_json(const LoopSettings& s);

struct TunerSettings {
  std::size_t generations = 100;
  std::size_t pop_size = 20;
  std::size_t elite_count = 2;
  double crossover_ratio = 0.8;
  double mutation_ratio = 0.2;
  double pareto_fraction = 0.7;
  double tolerance = -std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> seeds;
  std::size_t workers = 0;
};

TunerSettings tuner_settings_from_json(const nlohmann::json& j,
                                       TunerSettings defaults);

/// Everything one CLI run needs.
struct RunConfig {
  std::string plant_label = "gp1";
  PlantModel plant = plant_preset("gp1");
  std::optional<ControllerSpec> controller;
  Scenario scenario{};
  LoopSettings loop{};
  TunerSettings tuner{};
  std::uint64_t seed = 42;
};

/// Top-level keys: plant, controller, scenario, loop, tuner, seed.
/// Unknown keys anywhere are rejected. Everything is validated before return.
RunConfig run_config_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j);

}  // namespace frachz

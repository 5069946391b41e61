// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

namespace frachz {

using nlohmann::json;

namespace {

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) {
    throw ConfigError(std::string(what) + ": expected an object");
  }
}

void reject_unknown(const json& j, std::string_view what,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) {
      throw ConfigError(std::string(what) + ": unknown key '" + key + "'");
    }
  }
}

double number(const json& j, std::string_view what) {
  if (!j.is_number()) {
    throw ConfigError(std::string(what) + ": expected a number");
  }
  return j.get<double>();
}

template <typename F>
auto rethrow_invalid(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

json to_json(const ControllerSpec& spec) {
  json params = json::object();
  for (auto name : parameter_names(spec.structure)) {
    params[std::string(name)] = spec.at(name);
  }
  return json{{"structure", std::string(structure_tag(spec.structure))},
              {"parameters", params}};
}

ControllerSpec controller_from_json(const json& j) {
  require_object(j, "controller");
  reject_unknown(j, "controller", {"structure", "parameters"});
  if (!j.contains("structure") || !j["structure"].is_string()) {
    throw ConfigError("controller: 'structure' tag is required");
  }
  if (!j.contains("parameters")) {
    throw ConfigError("controller: 'parameters' object is required");
  }
  require_object(j["parameters"], "controller.parameters");
  return rethrow_invalid([&] {
    ControllerSpec spec;
    spec.structure = structure_from_tag(j["structure"].get<std::string>());
    for (const auto& [key, value] : j["parameters"].items()) {
      spec.parameters[key] = number(value, "controller.parameters." + key);
    }
    validate(spec);
    return spec;
  });
}

json to_json(const Scenario& sc) {
  json j{{"horizon", sc.horizon},
         {"setpoint_time", sc.setpoint_time},
         {"setpoint_mag", sc.setpoint_mag},
         {"disturbance_mag", sc.disturbance_mag}};
  j["disturbance_time"] =
      sc.disturbance_time ? json(*sc.disturbance_time) : json(nullptr);
  return j;
}

Scenario scenario_from_json(const json& j, Scenario sc) {
  require_object(j, "scenario");
  reject_unknown(j, "scenario",
                 {"horizon", "setpoint_time", "setpoint_mag",
                  "disturbance_time", "disturbance_mag"});
  if (j.contains("horizon")) sc.horizon = number(j["horizon"], "horizon");
  if (j.contains("setpoint_time")) {
    sc.setpoint_time = number(j["setpoint_time"], "setpoint_time");
  }
  if (j.contains("setpoint_mag")) {
    sc.setpoint_mag = number(j["setpoint_mag"], "setpoint_mag");
  }
  if (j.contains("disturbance_time")) {
    if (j["disturbance_time"].is_null()) {
      sc.disturbance_time.reset();
    } else {
      sc.disturbance_time = number(j["disturbance_time"], "disturbance_time");
    }
  }
  if (j.contains("disturbance_mag")) {
    sc.disturbance_mag = number(j["disturbance_mag"], "disturbance_mag");
  }
  rethrow_invalid([&] {
    validate(sc);
    return 0;
  });
  return sc;
}

json to_json(const PlantModel& m) {
  return json{{"K", m.gain},
              {"T", m.time_constant},
              {"alpha", m.alpha},
              {"L", m.dead_time}};
}

PlantModel plant_from_json(const json& j) {
  if (j.is_string()) {
    return rethrow_invalid([&] { return plant_preset(j.get<std::string>()); });
  }
  require_object(j, "plant");
  reject_unknown(j, "plant", {"K", "T", "alpha", "L"});
  for (auto key : {"K", "T", "alpha", "L"}) {
    if (!j.contains(key)) {
      throw ConfigError(std::string("plant: missing '") + key + "'");
    }
  }
  PlantModel m{number(j["K"], "plant.K"), number(j["T"], "plant.T"),
               number(j["alpha"], "plant.alpha"), number(j["L"], "plant.L")};
  rethrow_invalid([&] {
    validate(m);
    return 0;
  });
  return m;
}

LoopSettings loop_settings_from_json(const json& j, LoopSettings s) {
  require_object(j, "loop");
  reject_unknown(j, "loop",
                 {"dt", "band", "filter_order", "discretization", "integrator",
                  "uss_mode", "weights", "divergence_limit",
                  "actuator_limit"});
  if (j.contains("dt")) s.ops.dt = number(j["dt"], "loop.dt");
  if (j.contains("band")) {
    const auto& b = j["band"];
    if (!b.is_array() || b.size() != 2) {
      throw ConfigError("loop.band: expected [low, high]");
    }
    s.ops.band = Band{number(b[0], "loop.band"), number(b[1], "loop.band")};
  }
  if (j.contains("filter_order")) {
    if (!j["filter_order"].is_number_integer()) {
      throw ConfigError("loop.filter_order: expected an integer");
    }
    s.ops.half_order = j["filter_order"].get<int>();
  }
  if (j.contains("discretization")) {
    const auto m = j["discretization"].get<std::string>();
    if (m == "tustin") {
      s.ops.method = Discretization::kTustin;
    } else if (m == "backward-euler") {
      s.ops.method = Discretization::kBackwardEuler;
    } else {
      throw ConfigError("loop.discretization: unknown method '" + m + "'");
    }
  }
  if (j.contains("integrator")) {
    const auto m = j["integrator"].get<std::string>();
    if (m == "exact") {
      s.ops.integral_split = IntegerSplit::kFloor;
    } else if (m == "oustaloup") {
      s.ops.integral_split = IntegerSplit::kTruncate;
    } else {
      throw ConfigError("loop.integrator: unknown realization '" + m + "'");
    }
  }
  if (j.contains("uss_mode")) {
    s.uss_mode = rethrow_invalid(
        [&] { return uss_mode_from_name(j["uss_mode"].get<std::string>()); });
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_array() || w.size() != 2) {
      throw ConfigError("loop.weights: expected [w1, w2]");
    }
    s.w1 = number(w[0], "loop.weights");
    s.w2 = number(w[1], "loop.weights");
  }
  if (j.contains("divergence_limit")) {
    s.divergence_limit = number(j["divergence_limit"], "loop.divergence_limit");
  }
  if (j.contains("actuator_limit")) {
    if (j["actuator_limit"].is_null()) {
      s.actuator_limit.reset();
    } else {
      s.actuator_limit = number(j["actuator_limit"], "loop.actuator_limit");
    }
  }
  if (!(s.ops.dt > 0.0)) throw ConfigError("loop.dt must be > 0");
  if (!(s.ops.band.low > 0.0 && s.ops.band.low < s.ops.band.high)) {
    throw ConfigError("loop.band must satisfy 0 < low < high");
  }
  if (s.ops.half_order < 1) throw ConfigError("loop.filter_order must be >= 1");
  if (s.w1 < 0.0 || s.w2 < 0.0) throw ConfigError("loop.weights must be >= 0");
  return s;
}

json to_json(const LoopSettings& s) {
  return json{
      {"dt", s.ops.dt},
      {"band", {s.ops.band.low, s.ops.band.high}},
      {"filter_order", s.ops.half_order},
      {"discretization",
       s.ops.method == Discretization::kTustin ? "tustin" : "backward-euler"},
      {"integrator",
       s.ops.integral_split == IntegerSplit::kFloor ? "exact" : "oustaloup"},
      {"uss_mode", std::string(uss_mode_name(s.uss_mode))},
      {"weights", {s.w1, s.w2}},
      {"divergence_limit", s.divergence_limit},
      {"actuator_limit",
       s.actuator_limit ? json(*s.actuator_limit) : json(nullptr)}};
}

TunerSettings tuner_settings_from_json(const json& j, TunerSettings t) {
  require_object(j, "tuner");
  reject_unknown(j, "tuner",
                 {"generations", "pop_size", "elite_count", "crossover_ratio",
                  "mutation_ratio", "pareto_fraction", "tolerance", "seeds",
                  "workers"});
  const auto count = [&](const char* key, std::size_t& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_unsigned()) {
      throw ConfigError(std::string("tuner.") + key + ": expected a count");
    }
    out = j[key].get<std::size_t>();
  };
  count("generations", t.generations);
  count("pop_size", t.pop_size);
  count("elite_count", t.elite_count);
  count("workers", t.workers);
  if (j.contains("crossover_ratio")) {
    t.crossover_ratio = number(j["crossover_ratio"], "tuner.crossover_ratio");
  }
  if (j.contains("mutation_ratio")) {
    t.mutation_ratio = number(j["mutation_ratio"], "tuner.mutation_ratio");
  }
  if (j.contains("pareto_fraction")) {
    t.pareto_fraction = number(j["pareto_fraction"], "tuner.pareto_fraction");
  }
  if (j.contains("tolerance")) {
    t.tolerance = number(j["tolerance"], "tuner.tolerance");
  }
  if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) throw ConfigError("tuner.seeds: expected list");
    t.seeds.clear();
    for (const auto& s : j["seeds"]) {
      if (!s.is_number_unsigned()) {
        throw ConfigError("tuner.seeds: expected unsigned integers");
      }
      t.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  if (t.elite_count >= t.pop_size) {
    throw ConfigError("tuner.elite_count must be < pop_size");
  }
  for (double r : {t.crossover_ratio, t.mutation_ratio}) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw ConfigError("tuner ratios must lie in [0, 1]");
    }
  }
  if (!(t.pareto_fraction > 0.0 && t.pareto_fraction <= 1.0)) {
    throw ConfigError("tuner.pareto_fraction must lie in (0, 1]");
  }
  return t;
}

RunConfig run_config_from_json(const json& j) {
  require_object(j, "config");
  reject_unknown(j, "config",
                 {"plant", "controller", "scenario", "loop", "tuner", "seed"});
  RunConfig rc;
  if (j.contains("plant")) {
    rc.plant = plant_from_json(j["plant"]);
    rc.plant_label = j["plant"].is_string() ? j["plant"].get<std::string>()
                                            : std::string("custom");
  }
  const std::string preset =
      !j.contains("plant") || j["plant"].is_string() ? rc.plant_label : "";
  rc.loop = default_loop_settings(preset);
  rc.scenario = default_scenario(preset, false);
  if (j.contains("loop")) rc.loop = loop_settings_from_json(j["loop"], rc.loop);
  if (j.contains("scenario")) {
    rc.scenario = scenario_from_json(j["scenario"], rc.scenario);
  }
  if (j.contains("controller")) {
    rc.controller = controller_from_json(j["controller"]);
  }
  if (j.contains("tuner")) {
    rc.tuner = tuner_settings_from_json(j["tuner"], rc.tuner);
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw ConfigError("seed: expected an unsigned integer");
    }
    rc.seed = j["seed"].get<std::uint64_t>();
  }
  if (rc.plant.dead_time > 0.0 && rc.loop.ops.dt > rc.plant.dead_time) {
    throw ConfigError("loop.dt must not exceed the plant dead time");
  }
  return rc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path.string() + "': " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace frachz

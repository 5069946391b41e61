// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/design.hpp"

#include <stdexcept>
#include <string>

namespace frachz {

SearchSpace controller_search_space(Structure s) {
  SearchSpace space;
  for (auto name : parameter_names(s)) {
    const auto b = bounds_of(parameter_kind(s, name));
    space.dims.push_back(Dimension{std::string(name), b.lower, b.upper});
  }
  return space;
}

std::string_view objective_pair_tag(ObjectivePair p) {
  return p == ObjectivePair::kTrackingEffort ? "tracking-effort"
                                             : "tracking-disturbance";
}

ObjectivePair objective_pair_from_tag(std::string_view tag) {
  if (tag == "tracking-effort") return ObjectivePair::kTrackingEffort;
  if (tag == "tracking-disturbance") return ObjectivePair::kTrackingDisturbance;
  throw std::invalid_argument("unknown objective pair '" + std::string(tag) +
                              "'");
}

Fitness controller_fitness(const PlantModel& plant, Structure s,
                           const Scenario& sc, const LoopSettings& settings) {
  validate(plant);
  validate(sc);
  return [=](std::span<const double> x) {
    return evaluate_candidate(plant, ControllerSpec::from_vector(s, x), sc,
                              settings);
  };
}

Objectives controller_objectives(const PlantModel& plant, Structure s,
                                 ObjectivePair pair, const Scenario& sc,
                                 const LoopSettings& settings) {
  validate(plant);
  validate(sc);
  if (pair == ObjectivePair::kTrackingDisturbance && !sc.disturbance_time) {
    throw std::invalid_argument(
        "tracking-disturbance objectives need a disturbance_time");
  }
  return [=](std::span<const double> x) -> std::vector<double> {
    const auto ev = evaluate_indices(plant, ControllerSpec::from_vector(s, x),
                                     sc, settings);
    if (!ev.stable) return {kPenalty, kPenalty};
    const double second = pair == ObjectivePair::kTrackingEffort
                              ? ev.indices.isdco_setpoint
                              : ev.indices.istse_load;
    return {ev.indices.istse_setpoint, second};
  };
}

TuneResult tune_controller(const PlantModel& plant, Structure s,
                           const Scenario& sc, const LoopSettings& settings,
                           const GaConfig& cfg,
                           std::span<const std::uint64_t> seeds) {
  const auto space = controller_search_space(s);
  const auto fitness = controller_fitness(plant, s, sc, settings);
  TuneResult out;
  out.ga = seeds.empty() ? ga_optimize(space, fitness, cfg)
                         : ga_optimize_restarts(space, fitness, cfg, seeds);
  out.spec = ControllerSpec::from_vector(s, out.ga.best);
  out.fitness = out.ga.best_fitness;
  return out;
}

ParetoArchive pareto_controller(const PlantModel& plant, Structure s,
                                ObjectivePair pair, const Scenario& sc,
                                const LoopSettings& settings,
                                const Nsga2Config& cfg) {
  return nsga2_optimize(controller_search_space(s),
                        controller_objectives(plant, s, pair, sc, settings),
                        cfg);
}

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "frachz/controllers.hpp"
#include "frachz/loop.hpp"
#include "frachz/plant.hpp"
#include "frachz/tuner.hpp"

namespace frachz {

/// Box of a structure's parameters in table-header order.
SearchSpace controller_search_space(Structure s);

/// Objective pairs for the trade-off studies.
enum class ObjectivePair {
  kTrackingEffort,       // (J1, J2) on a set-point-only run
  kTrackingDisturbance,  // (J1, J3) with a load step
};

std::string_view objective_pair_tag(ObjectivePair p);
ObjectivePair objective_pair_from_tag(std::string_view tag);

/// Single-objective fitness: evaluate_candidate on the decoded spec.
Fitness controller_fitness(const PlantModel& plant, Structure s,
                           const Scenario& sc, const LoopSettings& settings);

/// Objective vector for a pair; unstable candidates score kPenalty in both.
Objectives controller_objectives(const PlantModel& plant, Structure s,
                                 ObjectivePair pair, const Scenario& sc,
                                 const LoopSettings& settings);

struct TuneResult {
  ControllerSpec spec;
  double fitness = 0.0;
  GaResult ga;
};

TuneResult tune_controller(const PlantModel& plant, Structure s,
                           const Scenario& sc, const LoopSettings& settings,
                           const GaConfig& cfg,
                           std::span<const std::uint64_t> seeds);

ParetoArchive pareto_controller(const PlantModel& plant, Structure s,
                                ObjectivePair pair, const Scenario& sc,
                                const LoopSettings& settings,
                                const Nsga2Config& cfg);

}  // namespace frachz

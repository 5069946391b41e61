// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace frachz {

struct Dimension {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
};

/// Ordered box-constrained decision space.
struct SearchSpace {
  std::vector<Dimension> dims;

  std::size_t size() const { return dims.size(); }
  bool contains(std::span<const double> x) const;
  void clip(std::span<double> x) const;
};

using Fitness = std::function<double(std::span<const double>)>;
using Objectives = std::function<std::vector<double>(std::span<const double>)>;

/// Genetic operators shared by the GA and NSGA-II.
struct OperatorConfig {
  double crossover_ratio = 0.8;
  double mutation_ratio = 0.2;
  /// Blend crossover draws each child gene from
  /// p1 + g (p2 - p1), g ~ U(-ext, 1 + ext).
  double blend_extension = 0.25;
  /// Gaussian mutation sigma as a fraction of each dimension's range.
  double mutation_scale = 0.1;
};

struct GaConfig {
  std::size_t pop_size = 20;
  std::size_t elite_count = 2;
  OperatorConfig ops{};
  std::size_t max_generations = 100;
  /// Stop once the best fitness is at or below this level.
  double tolerance = -std::numeric_limits<double>::infinity();
  std::uint64_t seed = 1;
  /// Fitness worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

void validate(const GaConfig& cfg);

struct GaResult {
  std::vector<double> best;
  double best_fitness = std::numeric_limits<double>::infinity();
  /// Best-so-far fitness after initialization and after each generation.
  std::vector<double> history;
  std::size_t evaluations = 0;
};

GaResult ga_optimize(const SearchSpace& space, const Fitness& fitness,
                     const GaConfig& cfg);

/// Best of independent runs, one per seed (cfg.seed is ignored).
GaResult ga_optimize_restarts(const SearchSpace& space, const Fitness& fitness,
                              GaConfig cfg, std::span<const std::uint64_t> seeds);

struct Nsga2Config {
  std::size_t pop_size = 100;
  double pareto_fraction = 0.7;
  OperatorConfig ops{};
  std::size_t max_generations = 50;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
};

void validate(const Nsga2Config& cfg);

struct ParetoMember {
  std::vector<double> params;
  std::vector<double> objectives;
  int rank = 1;
  double crowding = 0.0;
};

struct ParetoArchive {
  std::vector<ParetoMember> members;
};

/// a dominates b under minimization.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Fast non-dominated sort; rank 1 is the non-dominated set.
std::vector<int> nondominated_sort(const std::vector<std::vector<double>>& points);

/// Crowding distance of the members of one front. Boundary members, and all
/// members of fronts with at most two points, get +inf.
std::vector<double> crowding_distance(
    const std::vector<std::vector<double>>& front);

ParetoArchive nsga2_optimize(const SearchSpace& space,
                             const Objectives& objectives,
                             const Nsga2Config& cfg);

/// Evaluates `fn` on every row, fanning out to `workers` threads. Results are
/// independent of the worker count.
std::vector<double> evaluate_all(const std::vector<std::vector<double>>& xs,
                                 const Fitness& fn, std::size_t workers);

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/tuner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace frachz {

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dims.size()) return false;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!(x[i] >= dims[i].lower && x[i] <= dims[i].upper)) return false;
  }
  return true;
}

void SearchSpace::clip(std::span<double> x) const {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    x[i] = std::clamp(x[i], dims[i].lower, dims[i].upper);
  }
}

namespace {

using Rng = std::mt19937_64;
using Population = std::vector<std::vector<double>>;

void check_space(const SearchSpace& space) {
  if (space.dims.empty()) throw std::invalid_argument("empty search space");
  for (const auto& d : space.dims) {
    if (!(d.lower <= d.upper) || !std::isfinite(d.lower) ||
        !std::isfinite(d.upper)) {
      throw std::invalid_argument("bad bounds for '" + d.name + "'");
    }
  }
}

void check_ops(const OperatorConfig& ops) {
  if (!(ops.crossover_ratio >= 0.0 && ops.crossover_ratio <= 1.0) ||
      !(ops.mutation_ratio >= 0.0 && ops.mutation_ratio <= 1.0)) {
    throw std::invalid_argument("crossover/mutation ratios must be in [0, 1]");
  }
}

std::size_t resolve_workers(std::size_t workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on `workers` threads.
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  workers = std::min(resolve_workers(workers), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

std::vector<double> random_point(const SearchSpace& space, Rng& rng) {
  std::vector<double> x(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& d = space.dims[i];
    x[i] = d.lower == d.upper
               ? d.lower
               : std::uniform_real_distribution<double>(d.lower, d.upper)(rng);
  }
  return x;
}

// Blend crossover with probability crossover_ratio, then per-gene Gaussian
// mutation with probability mutation_ratio, then clipping.
std::vector<double> make_child(const SearchSpace& space,
                               const OperatorConfig& ops,
                               const std::vector<double>& p1,
                               const std::vector<double>& p2, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> child = p1;
  if (unit(rng) < ops.crossover_ratio) {
    std::uniform_real_distribution<double> mix(-ops.blend_extension,
                                               1.0 + ops.blend_extension);
    for (std::size_t i = 0; i < child.size(); ++i) {
      child[i] = p1[i] + mix(rng) * (p2[i] - p1[i]);
    }
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < child.size(); ++i) {
    if (unit(rng) < ops.mutation_ratio) {
      const auto& d = space.dims[i];
      child[i] += gauss(rng) * ops.mutation_scale * (d.upper - d.lower);
    }
  }
  space.clip(child);
  return child;
}

}  // namespace

std::vector<double> evaluate_all(const Population& xs, const Fitness& fn,
                                 std::size_t workers) {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), workers, [&](std::size_t i) { out[i] = fn(xs[i]); });
  return out;
}

void validate(const GaConfig& cfg) {
  if (cfg.pop_size < 2) throw std::invalid_argument("GA: pop_size must be >= 2");
  if (cfg.elite_count >= cfg.pop_size) {
    throw std::invalid_argument("GA: elite_count must be < pop_size");
  }
  check_ops(cfg.ops);
}

GaResult ga_optimize(const SearchSpace& space, const Fitness& fitness,
                     const GaConfig& cfg) {
  check_space(space);
  validate(cfg);
  Rng rng(cfg.seed);

  Population pop;
  for (std::size_t i = 0; i < cfg.pop_size; ++i) {
    pop.push_back(random_point(space, rng));
  }
  std::vector<double> fit = evaluate_all(pop, fitness, cfg.workers);

  GaResult res;
  res.evaluations = pop.size();
  const auto record_best = [&] {
    const auto it = std::min_element(fit.begin(), fit.end());
    if (*it < res.best_fitness) {
      res.best_fitness = *it;
      res.best = pop[static_cast<std::size_t>(it - fit.begin())];
    }
    res.history.push_back(res.best_fitness);
  };
  record_best();

  std::uniform_int_distribution<std::size_t> pick(0, cfg.pop_size - 1);
  const auto tournament = [&]() -> const std::vector<double>& {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    return fit[b] < fit[a] ? pop[b] : pop[a];
  };

  for (std::size_t gen = 0; gen < cfg.max_generations; ++gen) {
    if (res.best_fitness <= cfg.tolerance) break;

    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return fit[a] < fit[b]; });

    Population next;
    std::vector<double> next_fit;
    for (std::size_t i = 0; i < cfg.elite_count; ++i) {
      next.push_back(pop[order[i]]);
      next_fit.push_back(fit[order[i]]);
    }
    Population children;
    while (next.size() + children.size() < cfg.pop_size) {
      const auto& p1 = tournament();
      const auto& p2 = tournament();
      children.push_back(make_child(space, cfg.ops, p1, p2, rng));
    }
    const auto child_fit = evaluate_all(children, fitness, cfg.workers);
    res.evaluations += children.size();
    next.insert(next.end(), children.begin(), children.end());
    next_fit.insert(next_fit.end(), child_fit.begin(), child_fit.end());
    pop = std::move(next);
    fit = std::move(next_fit);
    record_best();
  }
  return res;
}

GaResult ga_optimize_restarts(const SearchSpace& space, const Fitness& fitness,
                              GaConfig cfg,
                              std::span<const std::uint64_t> seeds) {
  GaResult best;
  for (auto seed : seeds) {
    cfg.seed = seed;
    GaResult r = ga_optimize(space, fitness, cfg);
    if (best.history.empty() || r.best_fitness < best.best_fitness) {
      best = std::move(r);
    }
    if (best.best_fitness <= cfg.tolerance) break;
  }
  return best;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

std::vector<int> nondominated_sort(const Population& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> counter(n, 0);
  std::vector<int> rank(n, 0);
  std::vector<std::size_t> front;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (dominates(points[p], points[q])) {
        dominated[p].push_back(q);
      } else if (dominates(points[q], points[p])) {
        ++counter[p];
      }
    }
    if (counter[p] == 0) {
      rank[p] = 1;
      front.push_back(p);
    }
  }
  int current = 1;
  while (!front.empty()) {
    std::vector<std::size_t> next;
    for (auto p : front) {
      for (auto q : dominated[p]) {
        if (--counter[q] == 0) {
          rank[q] = current + 1;
          next.push_back(q);
        }
      }
    }
    ++current;
    front = std::move(next);
  }
  return rank;
}

std::vector<double> crowding_distance(const Population& front) {
  const std::size_t n = front.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  const std::size_t m = front.front().size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < m; ++k) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return front[a][k] < front[b][k];
    });
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double span = front[order.back()][k] - front[order.front()][k];
    if (!(span > 0.0)) continue;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      dist[order[i]] +=
          (front[order[i + 1]][k] - front[order[i - 1]][k]) / span;
    }
  }
  return dist;
}

void validate(const Nsga2Config& cfg) {
  if (cfg.pop_size < 2) {
    throw std::invalid_argument("NSGA-II: pop_size must be >= 2");
  }
  if (!(cfg.pareto_fraction > 0.0 && cfg.pareto_fraction <= 1.0)) {
    throw std::invalid_argument("NSGA-II: pareto_fraction must be in (0, 1]");
  }
  check_ops(cfg.ops);
}

namespace {

struct Scored {
  Population xs;
  Population fs;
  std::vector<int> rank;
  std::vector<double> crowd;
};

Population evaluate_objectives(const Population& xs, const Objectives& fn,
                               std::size_t workers) {
  Population out(xs.size());
  parallel_for(xs.size(), workers, [&](std::size_t i) { out[i] = fn(xs[i]); });
  return out;
}

// Assigns rank and per-front crowding distance.
void score(Scored& s) {
  s.rank = nondominated_sort(s.fs);
  s.crowd.assign(s.xs.size(), 0.0);
  const int max_rank =
      s.rank.empty() ? 0 : *std::max_element(s.rank.begin(), s.rank.end());
  for (int r = 1; r <= max_rank; ++r) {
    std::vector<std::size_t> idx;
    Population front;
    for (std::size_t i = 0; i < s.rank.size(); ++i) {
      if (s.rank[i] == r) {
        idx.push_back(i);
        front.push_back(s.fs[i]);
      }
    }
    const auto d = crowding_distance(front);
    for (std::size_t i = 0; i < idx.size(); ++i) s.crowd[idx[i]] = d[i];
  }
}

bool crowded_less(const Scored& s, std::size_t a, std::size_t b) {
  if (s.rank[a] != s.rank[b]) return s.rank[a] < s.rank[b];
  return s.crowd[a] > s.crowd[b];
}

}  // namespace

ParetoArchive nsga2_optimize(const SearchSpace& space,
                             const Objectives& objectives,
                             const Nsga2Config& cfg) {
  check_space(space);
  validate(cfg);
  Rng rng(cfg.seed);

  Scored cur;
  for (std::size_t i = 0; i < cfg.pop_size; ++i) {
    cur.xs.push_back(random_point(space, rng));
  }
  cur.fs = evaluate_objectives(cur.xs, objectives, cfg.workers);
  score(cur);

  std::uniform_int_distribution<std::size_t> pick(0, cfg.pop_size - 1);
  for (std::size_t gen = 0; gen < cfg.max_generations; ++gen) {
    const auto tournament = [&]() -> const std::vector<double>& {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      return crowded_less(cur, b, a) ? cur.xs[b] : cur.xs[a];
    };
    Population children;
    while (children.size() < cfg.pop_size) {
      const auto& p1 = tournament();
      const auto& p2 = tournament();
      children.push_back(make_child(space, cfg.ops, p1, p2, rng));
    }
    auto child_fs = evaluate_objectives(children, objectives, cfg.workers);

    Scored all;
    all.xs = cur.xs;
    all.fs = cur.fs;
    all.xs.insert(all.xs.end(), children.begin(), children.end());
    all.fs.insert(all.fs.end(), child_fs.begin(), child_fs.end());
    score(all);

    std::vector<std::size_t> order(all.xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return crowded_less(all, a, b);
    });
    Scored next;
    for (std::size_t i = 0; i < cfg.pop_size; ++i) {
      next.xs.push_back(all.xs[order[i]]);
      next.fs.push_back(all.fs[order[i]]);
    }
    score(next);
    cur = std::move(next);
  }

  // Distinct rank-1 members, thinned to the Pareto fraction by repeatedly
  // dropping the most crowded one.
  Population xs;
  Population fs;
  for (std::size_t i = 0; i < cur.xs.size(); ++i) {
    if (cur.rank[i] != 1) continue;
    if (std::find(xs.begin(), xs.end(), cur.xs[i]) != xs.end()) continue;
    xs.push_back(cur.xs[i]);
    fs.push_back(cur.fs[i]);
  }
  const auto cap = static_cast<std::size_t>(
      std::ceil(cfg.pareto_fraction * static_cast<double>(cfg.pop_size)));
  std::vector<double> crowd = crowding_distance(fs);
  while (xs.size() > cap) {
    const auto worst = static_cast<std::size_t>(
        std::min_element(crowd.begin(), crowd.end()) - crowd.begin());
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(worst));
    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(worst));
    crowd = crowding_distance(fs);
  }

  ParetoArchive archive;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    archive.members.push_back(ParetoMember{xs[i], fs[i], 1, crowd[i]});
  }
  return archive;
}

}  // namespace frachz

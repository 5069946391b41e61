// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frachz {

std::string_view label_name(Label label) {
  static constexpr std::array<std::string_view, kLabelCount> names = {
      "NL", "NM", "NS", "ZR", "PS", "PM", "PL"};
  return names[label_index(label)];
}

MembershipSet MembershipSet::standard() {
  MembershipSet s;
  for (int k = -3; k <= 3; ++k) s.centers[k + 3] = k / 3.0;
  s.half_width = 1.0 / 3.0;
  return s;
}

Degrees mf_degrees(const MembershipSet& set, double x) {
  x = std::clamp(x, -1.0, 1.0);
  Degrees d{};
  for (int k = 0; k < kLabelCount; ++k) {
    d[k] = std::max(0.0, 1.0 - std::abs(x - set.centers[k]) / set.half_width);
  }
  return d;
}

RuleBase RuleBase::standard() {
  RuleBase rb;
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      rb.table_[i + 3][j + 3] = static_cast<Label>(std::clamp(i + j, -3, 3));
    }
  }
  return rb;
}

FuzzyEngine::FuzzyEngine(int resolution, RuleBase rules)
    : sets_(MembershipSet::standard()),
      rules_(rules),
      resolution_(resolution) {
  if (resolution < 201 || resolution % 2 == 0) {
    throw std::invalid_argument(
        "fuzzy engine: defuzzification resolution must be odd and >= 201");
  }
}

Degrees FuzzyEngine::fire(double e_norm, double de_norm) const {
  const Degrees de = mf_degrees(sets_, e_norm);
  const Degrees dd = mf_degrees(sets_, de_norm);
  Degrees strength{};
  for (int i = 0; i < kLabelCount; ++i) {
    if (de[i] <= 0.0) continue;
    for (int j = 0; j < kLabelCount; ++j) {
      if (dd[j] <= 0.0) continue;
      const int out = label_index(rules_.consequent(label_at(i), label_at(j)));
      strength[out] = std::max(strength[out], std::min(de[i], dd[j]));
    }
  }
  return strength;
}

namespace {

// Sums over grid offsets j = j0..j1 (integers, j = i - H).
struct OffsetSums {
  double count = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;
};

double cumulative_sq(double j) { return j * (j + 1.0) * (2.0 * j + 1.0) / 6.0; }

OffsetSums offset_sums(long j0, long j1) {
  OffsetSums s;
  if (j1 < j0) return s;
  const double a = static_cast<double>(j0);
  const double b = static_cast<double>(j1);
  s.count = b - a + 1.0;
  s.sum = s.count * (a + b) * 0.5;
  s.sum_sq = cumulative_sq(b) - cumulative_sq(a - 1.0);
  return s;
}

double centroid(const Degrees& strengths, const MembershipSet& sets,
                int resolution) {
  const long half = (resolution - 1) / 2;
  const double h = static_cast<double>(half);
  const double w = sets.half_width;

  double num = 0.0;
  double den = 0.0;

  for (int k = 0; k + 1 < kLabelCount; ++k) {
    const double sl = strengths[k];
    const double sr = strengths[k + 1];
    if (sl <= 0.0 && sr <= 0.0) continue;

    // On [c_k, c_k+1] with local t in [0, 1] only the two neighbouring
    // triangles are nonzero; their clipped max changes slope only here.
    std::array<double, 7> cuts = {0.0, 1.0, sl, 1.0 - sl, sr, 1.0 - sr, 0.5};
    std::sort(cuts.begin(), cuts.end());
    const auto mu = [&](double t) {
      return std::max(std::min(sl, 1.0 - t), std::min(sr, t));
    };
    const double ck = sets.centers[k];

    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double ta = std::max(cuts[c], 0.0);
      const double tb = std::min(cuts[c + 1], 1.0);
      if (!(tb > ta)) continue;
      const double xa = ck + ta * w;
      const double xb = ck + tb * w;
      const double ma = mu(ta);
      const double mb = mu(tb);
      if (ma <= 0.0 && mb <= 0.0) continue;
      const double slope = (mb - ma) / (xb - xa);

      // Grid points x_j = j / H with xa <= x_j < xb.
      const long j0 = static_cast<long>(std::ceil(xa * h));
      const long j1 = static_cast<long>(std::ceil(xb * h)) - 1;
      const OffsetSums s = offset_sums(std::max(j0, -half), std::min(j1, half));
      if (s.count <= 0.0) continue;
      const double sum_x = s.sum / h;
      const double sum_x2 = s.sum_sq / (h * h);
      den += ma * s.count + slope * (sum_x - xa * s.count);
      num += (ma - slope * xa) * sum_x + slope * sum_x2;
    }
  }

  // Right edge x = 1 is excluded by the half-open pieces; trapezoid weights
  // give both edges half weight.
  const double left = strengths[0];
  const double right = strengths[kLabelCount - 1];
  den += -0.5 * left + 0.5 * right;
  num += 0.5 * left + 0.5 * right;

  if (!(den > 0.0)) return 0.0;
  return std::clamp(num / den, -1.0, 1.0);
}

}  // namespace

double FuzzyEngine::defuzzify(const Degrees& strengths) const {
  // Negated inputs mirror the strengths exactly; averaging with the mirrored
  // centroid makes the output an exact negation instead of a rounding match.
  Degrees mirrored;
  std::reverse_copy(strengths.begin(), strengths.end(), mirrored.begin());
  return 0.5 * (centroid(strengths, sets_, resolution_) -
                centroid(mirrored, sets_, resolution_));
}

double FuzzyEngine::infer(double e_norm, double de_norm) const {
  return defuzzify(fire(e_norm, de_norm));
}

std::shared_ptr<const FuzzyEngine> default_engine() {
  static const auto engine = std::make_shared<const FuzzyEngine>();
  return engine;
}

ControlSurface control_surface(const FuzzyEngine& engine, int grid_n) {
  if (grid_n < 2) {
    throw std::invalid_argument("control surface: grid_n must be >= 2");
  }
  ControlSurface s;
  s.grid_n = grid_n;
  s.axis.resize(grid_n);
  const double half = (grid_n - 1) / 2.0;
  for (int i = 0; i < grid_n; ++i) s.axis[i] = (i - half) / half;
  s.values.resize(static_cast<std::size_t>(grid_n) * grid_n);
  for (int r = 0; r < grid_n; ++r) {
    for (int c = 0; c < grid_n; ++c) {
      s.values[r * grid_n + c] = engine.infer(s.axis[r], s.axis[c]);
    }
  }
  return s;
}

}  // namespace frachz

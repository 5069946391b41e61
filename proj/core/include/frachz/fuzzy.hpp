// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <memory>
#include <string_view>
#include <vector>

namespace frachz {

inline constexpr int kLabelCount = 7;

/// Linguistic labels, ordered from NL (index 0, value -3) to PL (index 6).
enum class Label : int { NL = -3, NM, NS, ZR, PS, PM, PL };

std::string_view label_name(Label label);
constexpr int label_index(Label label) { return static_cast<int>(label) + 3; }
constexpr Label label_at(int index) { return static_cast<Label>(index - 3); }

using Degrees = std::array<double, kLabelCount>;

/// Seven triangular sets on [-1, 1] with 50% overlap: centers k/3 for
/// k = -3..3 and half width 1/3. NL and PL peak on the universe edges.
struct MembershipSet {
  std::array<double, kLabelCount> centers{};
  double half_width = 1.0 / 3.0;

  static MembershipSet standard();
};

/// Membership degrees of `x` after clamping it into [-1, 1].
Degrees mf_degrees(const MembershipSet& set, double x);

/// 7x7 rule table indexed by (error label, rate label).
class RuleBase {
 public:
  /// The table with consequent clamp(i + j, -3, 3).
  static RuleBase standard();

  Label consequent(Label error, Label rate) const {
    return table_[label_index(error)][label_index(rate)];
  }
  void set(Label error, Label rate, Label out) {
    table_[label_index(error)][label_index(rate)] = out;
  }

 private:
  std::array<std::array<Label, kLabelCount>, kLabelCount> table_{};
};

/// Two-input Mamdani engine: min conjunction, min implication, max
/// aggregation, centroid defuzzification on a uniform grid over [-1, 1].
///
/// The centroid is the ratio of composite-trapezoid sums on
/// `resolution` equally spaced points. The aggregate is piecewise linear,
/// so the sums are taken in closed form per linear piece; the result is the
/// same as visiting every grid point.
class FuzzyEngine {
 public:
  explicit FuzzyEngine(int resolution = 1001,
                       RuleBase rules = RuleBase::standard());

  double infer(double e_norm, double de_norm) const;

  /// Aggregated firing strength of every output label for the given inputs.
  Degrees fire(double e_norm, double de_norm) const;

  /// Centroid of the max-aggregated, clipped output sets.
  double defuzzify(const Degrees& strengths) const;

  int resolution() const { return resolution_; }
  const MembershipSet& sets() const { return sets_; }
  const RuleBase& rules() const { return rules_; }

 private:
  MembershipSet sets_;
  RuleBase rules_;
  int resolution_;
};

/// Shared instance with the default geometry, rule base and resolution.
std::shared_ptr<const FuzzyEngine> default_engine();

/// grid_n x grid_n evaluation of infer over [-1, 1]^2, row-major with the
/// error coordinate as the row.
struct ControlSurface {
  int grid_n = 0;
  std::vector<double> axis;
  std::vector<double> values;

  double at(int row, int col) const { return values[row * grid_n + col]; }
};

ControlSurface control_surface(const FuzzyEngine& engine, int grid_n);

}  // namespace frachz

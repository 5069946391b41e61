// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frachz/controllers.hpp"

namespace frachz {

/// Non-integer order plus time delay plant K e^{-Ls} / (T s^alpha + 1).
struct PlantModel {
  double gain = 1.0;           // K
  double time_constant = 1.0;  // T, in s^alpha
  double alpha = 1.0;
  double dead_time = 0.0;      // L, seconds

  bool operator==(const PlantModel&) const = default;
};

void validate(const PlantModel& m);

/// Named presets "gp1", "gp2", "gp3" (lag dominant, balanced, delay dominant).
PlantModel plant_preset(std::string_view name);
std::vector<std::string> plant_preset_names();

/// L / (L + T).
double relative_dead_time(const PlantModel& m);

/// Discrete-time plant: delay line followed by the fractional lag.
///
/// s^alpha is split into s^m s^a (m integer, |a| < 1) and s^a replaced by its
/// Oustaloup filter. The lag is realized as the unity feedback loop around
/// K-scaled forward path s^-m (Oustaloup s^a)^-1 / T and held exactly over
/// each sample (zero-order hold).
class PlantRealization {
 public:
  PlantRealization(const PlantModel& model, const OperatorSettings& settings);

  /// Pushes u into the delay line, advances one sample and returns y.
  double step(double u);
  double output() const { return y_; }
  void reset();

  std::size_t delay_samples() const { return delay_.size(); }
  std::size_t state_dim() const { return x_.size(); }
  double dt() const { return dt_; }
  const PlantModel& model() const { return model_; }

 private:
  PlantModel model_;
  double dt_;
  std::vector<double> ad_;  // row-major n x n
  std::vector<double> bd_;
  std::vector<double> c_;
  double d_ = 0.0;

  std::vector<double> x_;
  std::vector<double> scratch_;
  std::vector<double> delay_;
  std::size_t head_ = 0;
  double y_ = 0.0;
};

PlantRealization plant_realize(const PlantModel& model,
                               const OperatorSettings& settings);

}  // namespace frachz

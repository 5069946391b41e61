// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frachz/fracops.hpp"
#include "frachz/fuzzy.hpp"

namespace frachz {

/// The five hybrid fractional-order fuzzy PID structures.
enum class Structure {
  kFuzzyPID,       // K_PI I^λ[v] + K_PD v
  kFuzzyPIplusPD,  // K_PI I^λ[v1] + K_PD v2, two FLC input scalings
  kFuzzyPplusID,   // K_p v + K_i I^λ[e] - K_d2 D^μ2[y]
  kFuzzyPIplusD,   // K_PI I^λ[v] - K_d2 D^μ2[y]
  kFuzzyPDplusI,   // K_PD v + K_i I^λ[e]
};

inline constexpr std::array<Structure, 5> kAllStructures = {
    Structure::kFuzzyPID, Structure::kFuzzyPIplusPD, Structure::kFuzzyPplusID,
    Structure::kFuzzyPIplusD, Structure::kFuzzyPDplusI};

/// CLI/config tag, e.g. "fuzzy-p-id".
std::string_view structure_tag(Structure s);
/// Human-readable name, e.g. "FO fuzzy P+ID".
std::string_view structure_name(Structure s);
/// Accepts the tag; throws std::invalid_argument otherwise.
Structure structure_from_tag(std::string_view tag);

enum class ParameterKind { kInputScaling, kOutputGain, kOrder };

struct ParameterBounds {
  double lower;
  double upper;
};

ParameterBounds bounds_of(ParameterKind kind);

/// Parameter names of a structure in table-header order.
std::span<const std::string_view> parameter_names(Structure s);
ParameterKind parameter_kind(Structure s, std::string_view name);

struct ControllerSpec {
  Structure structure = Structure::kFuzzyPID;
  std::map<std::string, double, std::less<>> parameters;

  /// Builds a spec from values listed in parameter_names() order.
  static ControllerSpec from_vector(Structure s, std::span<const double> v);
  std::vector<double> to_vector() const;
  double at(std::string_view name) const;

  bool operator==(const ControllerSpec&) const = default;
};

/// Throws std::invalid_argument on missing, unknown, non-finite or
/// out-of-bound parameters.
void validate(const ControllerSpec& spec);

/// Discretization settings shared by every fractional operator in a loop.
struct OperatorSettings {
  double dt = 0.01;
  Band band{};
  int half_order = 2;
  Discretization method = Discretization::kTustin;
  /// Split used for the controller's I^λ. kFloor realizes it as an exact
  /// integrator times s^(1-λ), which keeps the integral action's infinite
  /// DC gain; kTruncate fits s^-λ directly.
  IntegerSplit integral_split = IntegerSplit::kFloor;
};

/// Stateful discrete-time controller for one ControllerSpec.
class Controller {
 public:
  Controller(const ControllerSpec& spec, const OperatorSettings& settings,
             std::shared_ptr<const FuzzyEngine> engine = default_engine(),
             std::optional<double> actuator_limit = std::nullopt);

  /// One control update from the loop error and the measured output.
  double step(double error, double output);
  void reset();

  double last_output() const { return last_u_; }
  double dt() const { return settings_.dt; }
  const ControllerSpec& spec() const { return spec_; }

 private:
  ControllerSpec spec_;
  OperatorSettings settings_;
  std::shared_ptr<const FuzzyEngine> engine_;
  std::optional<double> limit_;

  // Scaling factors, unused ones stay zero.
  double ke1_ = 0, kd1_ = 0, ke2_ = 0, kd2_ = 0;
  double k_pi_ = 0, k_pd_ = 0, k_p_ = 0, k_i_ = 0, k_fb_ = 0;

  FractionalFilter rate_;       // D^μ (or D^μ1) on e
  FractionalFilter integral_;   // I^λ on FLC output or on e
  FractionalFilter feedback_;   // D^μ2 on y
  double last_u_ = 0.0;
};

Controller build_controller(const ControllerSpec& spec,
                            const OperatorSettings& settings);

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/controllers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace frachz {

namespace {

constexpr std::array<std::string_view, 6> kPidNames = {
    "K_e", "K_d", "K_PI", "K_PD", "lambda", "mu"};
constexpr std::array<std::string_view, 8> kPiPdNames = {
    "K_e1", "K_d1", "K_PI", "K_e2", "K_d2", "K_PD", "lambda", "mu"};
constexpr std::array<std::string_view, 8> kPIdNames = {
    "K_e", "K_d1", "K_p", "K_d2", "K_i", "lambda", "mu1", "mu2"};
constexpr std::array<std::string_view, 7> kPiDNames = {
    "K_e", "K_d1", "K_PI", "K_d2", "lambda", "mu1", "mu2"};
constexpr std::array<std::string_view, 6> kPdINames = {
    "K_e", "K_d", "K_i", "K_PD", "lambda", "mu"};

}  // namespace

std::string_view structure_tag(Structure s) {
  switch (s) {
    case Structure::kFuzzyPID: return "fuzzy-pid";
    case Structure::kFuzzyPIplusPD: return "fuzzy-pi-pd";
    case Structure::kFuzzyPplusID: return "fuzzy-p-id";
    case Structure::kFuzzyPIplusD: return "fuzzy-pi-d";
    case Structure::kFuzzyPDplusI: return "fuzzy-pd-i";
  }
  return "?";
}

std::string_view structure_name(Structure s) {
  switch (s) {
    case Structure::kFuzzyPID: return "FO fuzzy PID";
    case Structure::kFuzzyPIplusPD: return "FO fuzzy PI+PD";
    case Structure::kFuzzyPplusID: return "FO fuzzy P+ID";
    case Structure::kFuzzyPIplusD: return "FO fuzzy PI+D";
    case Structure::kFuzzyPDplusI: return "FO fuzzy PD+I";
  }
  return "?";
}

Structure structure_from_tag(std::string_view tag) {
  for (Structure s : kAllStructures) {
    if (structure_tag(s) == tag) return s;
  }
  throw std::invalid_argument("unknown controller structure '" +
                              std::string(tag) + "'");
}

ParameterBounds bounds_of(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kInputScaling: return {0.0, 1.0};
    case ParameterKind::kOutputGain: return {0.0, 40.0};
    case ParameterKind::kOrder: return {0.0, 2.0};
  }
  return {0.0, 0.0};
}

std::span<const std::string_view> parameter_names(Structure s) {
  switch (s) {
    case Structure::kFuzzyPID: return kPidNames;
    case Structure::kFuzzyPIplusPD: return kPiPdNames;
    case Structure::kFuzzyPplusID: return kPIdNames;
    case Structure::kFuzzyPIplusD: return kPiDNames;
    case Structure::kFuzzyPDplusI: return kPdINames;
  }
  return {};
}

ParameterKind parameter_kind(Structure s, std::string_view name) {
  if (name == "lambda" || name.starts_with("mu")) return ParameterKind::kOrder;
  if (name == "K_PI" || name == "K_PD" || name == "K_p" || name == "K_i") {
    return ParameterKind::kOutputGain;
  }
  // K_d2 scales the FLC rate input in PI+PD but is the feedback derivative
  // gain in the structures that differentiate y.
  if (name == "K_d2" &&
      (s == Structure::kFuzzyPplusID || s == Structure::kFuzzyPIplusD)) {
    return ParameterKind::kOutputGain;
  }
  return ParameterKind::kInputScaling;
}

ControllerSpec ControllerSpec::from_vector(Structure s,
                                           std::span<const double> v) {
  const auto names = parameter_names(s);
  if (v.size() != names.size()) {
    throw std::invalid_argument("parameter vector has wrong length for " +
                                std::string(structure_tag(s)));
  }
  ControllerSpec spec;
  spec.structure = s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    spec.parameters.emplace(std::string(names[i]), v[i]);
  }
  return spec;
}

std::vector<double> ControllerSpec::to_vector() const {
  std::vector<double> v;
  for (auto name : parameter_names(structure)) v.push_back(at(name));
  return v;
}

double ControllerSpec::at(std::string_view name) const {
  auto it = parameters.find(name);
  if (it == parameters.end()) {
    throw std::invalid_argument("missing parameter '" + std::string(name) +
                                "' for " + std::string(structure_tag(structure)));
  }
  return it->second;
}

void validate(const ControllerSpec& spec) {
  const auto names = parameter_names(spec.structure);
  for (const auto& [name, value] : spec.parameters) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw std::invalid_argument("parameter '" + name + "' is not used by " +
                                  std::string(structure_tag(spec.structure)));
    }
  }
  for (auto name : names) {
    const double value = spec.at(name);
    const auto b = bounds_of(parameter_kind(spec.structure, name));
    if (!std::isfinite(value) || value < b.lower || value > b.upper) {
      throw std::invalid_argument(
          "parameter '" + std::string(name) + "' = " + std::to_string(value) +
          " outside [" + std::to_string(b.lower) + ", " +
          std::to_string(b.upper) + "]");
    }
  }
}

Controller::Controller(const ControllerSpec& spec,
                       const OperatorSettings& settings,
                       std::shared_ptr<const FuzzyEngine> engine,
                       std::optional<double> actuator_limit)
    : spec_(spec),
      settings_(settings),
      engine_(std::move(engine)),
      limit_(actuator_limit) {
  validate(spec);
  if (!engine_) throw std::invalid_argument("controller: null fuzzy engine");
  if (limit_ && !(*limit_ > 0.0)) {
    throw std::invalid_argument("controller: actuator limit must be > 0");
  }

  const auto filter = [&](double order) {
    return make_fractional_filter(order, settings.dt, settings.half_order,
                                  settings.band, settings.method);
  };
  const auto integrator = [&](double lambda) {
    return make_fractional_filter(-lambda, settings.dt, settings.half_order,
                                  settings.band, settings.method,
                                  settings.integral_split);
  };

  switch (spec.structure) {
    case Structure::kFuzzyPID:
      ke1_ = spec.at("K_e");
      kd1_ = spec.at("K_d");
      k_pi_ = spec.at("K_PI");
      k_pd_ = spec.at("K_PD");
      rate_ = filter(spec.at("mu"));
      integral_ = integrator(spec.at("lambda"));
      break;
    case Structure::kFuzzyPIplusPD:
      ke1_ = spec.at("K_e1");
      kd1_ = spec.at("K_d1");
      ke2_ = spec.at("K_e2");
      kd2_ = spec.at("K_d2");
      k_pi_ = spec.at("K_PI");
      k_pd_ = spec.at("K_PD");
      rate_ = filter(spec.at("mu"));
      integral_ = integrator(spec.at("lambda"));
      break;
    case Structure::kFuzzyPplusID:
      ke1_ = spec.at("K_e");
      kd1_ = spec.at("K_d1");
      k_p_ = spec.at("K_p");
      k_i_ = spec.at("K_i");
      k_fb_ = spec.at("K_d2");
      rate_ = filter(spec.at("mu1"));
      integral_ = integrator(spec.at("lambda"));
      feedback_ = filter(spec.at("mu2"));
      break;
    case Structure::kFuzzyPIplusD:
      ke1_ = spec.at("K_e");
      kd1_ = spec.at("K_d1");
      k_pi_ = spec.at("K_PI");
      k_fb_ = spec.at("K_d2");
      rate_ = filter(spec.at("mu1"));
      integral_ = integrator(spec.at("lambda"));
      feedback_ = filter(spec.at("mu2"));
      break;
    case Structure::kFuzzyPDplusI:
      ke1_ = spec.at("K_e");
      kd1_ = spec.at("K_d");
      k_i_ = spec.at("K_i");
      k_pd_ = spec.at("K_PD");
      rate_ = filter(spec.at("mu"));
      integral_ = integrator(spec.at("lambda"));
      break;
  }
}

double Controller::step(double error, double output) {
  const double rate = rate_.step(error);
  double u = 0.0;
  switch (spec_.structure) {
    case Structure::kFuzzyPID: {
      const double v = engine_->infer(ke1_ * error, kd1_ * rate);
      u = k_pi_ * integral_.step(v) + k_pd_ * v;
      break;
    }
    case Structure::kFuzzyPIplusPD: {
      const double v1 = engine_->infer(ke1_ * error, kd1_ * rate);
      const double v2 = engine_->infer(ke2_ * error, kd2_ * rate);
      u = k_pi_ * integral_.step(v1) + k_pd_ * v2;
      break;
    }
    case Structure::kFuzzyPplusID: {
      const double v = engine_->infer(ke1_ * error, kd1_ * rate);
      u = k_p_ * v + k_i_ * integral_.step(error) -
          k_fb_ * feedback_.step(output);
      break;
    }
    case Structure::kFuzzyPIplusD: {
      const double v = engine_->infer(ke1_ * error, kd1_ * rate);
      u = k_pi_ * integral_.step(v) - k_fb_ * feedback_.step(output);
      break;
    }
    case Structure::kFuzzyPDplusI: {
      const double v = engine_->infer(ke1_ * error, kd1_ * rate);
      u = k_pd_ * v + k_i_ * integral_.step(error);
      break;
    }
  }
  if (limit_) u = std::clamp(u, -*limit_, *limit_);
  last_u_ = u;
  return u;
}

void Controller::reset() {
  rate_.reset();
  integral_.reset();
  feedback_.reset();
  last_u_ = 0.0;
}

Controller build_controller(const ControllerSpec& spec,
                            const OperatorSettings& settings) {
  return Controller(spec, settings);
}

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/plant.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <stdexcept>

namespace frachz {

void validate(const PlantModel& m) {
  if (!std::isfinite(m.gain) || m.gain == 0.0) {
    throw std::invalid_argument("plant: K must be finite and nonzero");
  }
  if (!(m.time_constant > 0.0) || !std::isfinite(m.time_constant)) {
    throw std::invalid_argument("plant: T must be > 0");
  }
  if (!(m.alpha > 0.0 && m.alpha < 2.0)) {
    throw std::invalid_argument("plant: alpha must lie in (0, 2)");
  }
  if (!(m.dead_time >= 0.0) || !std::isfinite(m.dead_time)) {
    throw std::invalid_argument("plant: L must be >= 0");
  }
}

PlantModel plant_preset(std::string_view name) {
  if (name == "gp1") return {1.0, 1.11, 1.5, 0.105};
  if (name == "gp2") return {5.0, 1.5, 1.5, 1.0};
  if (name == "gp3") return {1.0, 0.05, 1.5, 1.0};
  throw std::invalid_argument("unknown plant preset '" + std::string(name) +
                              "'");
}

std::vector<std::string> plant_preset_names() { return {"gp1", "gp2", "gp3"}; }

double relative_dead_time(const PlantModel& m) {
  if (!(m.dead_time >= 0.0) || !(m.time_constant > 0.0)) {
    throw std::invalid_argument("relative dead time needs L >= 0, T > 0");
  }
  return m.dead_time / (m.dead_time + m.time_constant);
}

namespace {

struct StateSpace {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::RowVectorXd c;
  double d = 0.0;
};

StateSpace gain_block(double k) {
  return {Eigen::MatrixXd(0, 0), Eigen::VectorXd(0), Eigen::RowVectorXd(0), k};
}

// second(first(u))
StateSpace series(const StateSpace& first, const StateSpace& second) {
  const auto n1 = first.a.rows();
  const auto n2 = second.a.rows();
  StateSpace s;
  s.a = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  s.a.topLeftCorner(n1, n1) = first.a;
  s.a.bottomLeftCorner(n2, n1) = second.b * first.c;
  s.a.bottomRightCorner(n2, n2) = second.a;
  s.b.resize(n1 + n2);
  s.b << first.b, second.b * first.d;
  s.c.resize(n1 + n2);
  s.c << second.d * first.c, second.c;
  s.d = second.d * first.d;
  return s;
}

// (s + num) / (s + den) = 1 + (num - den) / (s + den)
StateSpace lead_lag(double num, double den) {
  StateSpace s;
  s.a = Eigen::MatrixXd::Constant(1, 1, -den);
  s.b = Eigen::VectorXd::Ones(1);
  s.c = Eigen::RowVectorXd::Constant(1, num - den);
  s.d = 1.0;
  return s;
}

StateSpace integrator() {
  StateSpace s;
  s.a = Eigen::MatrixXd::Zero(1, 1);
  s.b = Eigen::VectorXd::Ones(1);
  s.c = Eigen::RowVectorXd::Ones(1);
  s.d = 0.0;
  return s;
}

}  // namespace

PlantRealization::PlantRealization(const PlantModel& model,
                                   const OperatorSettings& settings)
    : model_(model), dt_(settings.dt) {
  validate(model);
  if (!(dt_ > 0.0)) throw std::invalid_argument("plant: dt must be > 0");
  if (model.dead_time > 0.0 && dt_ > model.dead_time) {
    throw std::invalid_argument("plant: dt must not exceed the dead time");
  }

  const FilterDesign fo = oustaloup_synthesize(
      OustaloupSpec{model.alpha, settings.half_order, settings.band});

  // Forward path F = s^-m * (g prod (s+z)/(s+p))^-1 / T.
  StateSpace f = gain_block(1.0 / (fo.gain * model.time_constant));
  for (std::size_t k = 0; k < fo.zeros.size(); ++k) {
    if (fo.zeros[k] == fo.poles[k]) continue;
    f = series(f, lead_lag(fo.poles[k], fo.zeros[k]));
  }
  for (int i = 0; i < fo.integer_power; ++i) f = series(f, integrator());

  // y = F (K u - y)
  const double k = model.gain;
  const double inv = 1.0 / (1.0 + f.d);
  const Eigen::MatrixXd a = f.a - f.b * f.c * inv;
  const Eigen::VectorXd b = f.b * (k * inv);
  const Eigen::RowVectorXd c = f.c * inv;
  d_ = f.d * k * inv;

  const auto n = a.rows();
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = a * dt_;
  aug.topRightCorner(n, 1) = b * dt_;
  const Eigen::MatrixXd phi = aug.exp();

  ad_.resize(n * n);
  bd_.resize(n);
  c_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) ad_[i * n + j] = phi(i, j);
    bd_[i] = phi(i, n);
    c_[i] = c(i);
  }
  x_.assign(n, 0.0);
  scratch_.assign(n, 0.0);
  delay_.assign(static_cast<std::size_t>(std::lround(model.dead_time / dt_)),
                0.0);
}

double PlantRealization::step(double u) {
  double ud = u;
  if (!delay_.empty()) {
    ud = delay_[head_];
    delay_[head_] = u;
    head_ = (head_ + 1) % delay_.size();
  }
  const std::size_t n = x_.size();
  double y = d_ * ud;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = bd_[i] * ud;
    const double* row = &ad_[i * n];
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x_[j];
    scratch_[i] = acc;
    y += c_[i] * acc;
  }
  x_.swap(scratch_);
  y_ = y;
  return y_;
}

void PlantRealization::reset() {
  std::fill(x_.begin(), x_.end(), 0.0);
  std::fill(delay_.begin(), delay_.end(), 0.0);
  head_ = 0;
  y_ = 0.0;
}

PlantRealization plant_realize(const PlantModel& model,
                               const OperatorSettings& settings) {
  return PlantRealization(model, settings);
}

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/fracops.hpp"

#include <cmath>
#include <stdexcept>

namespace frachz {

std::pair<int, double> split_order(double order, IntegerSplit split) {
  if (!std::isfinite(order)) {
    throw std::invalid_argument("fractional order must be finite");
  }
  const double whole = split == IntegerSplit::kFloor ? std::floor(order)
                                                    : std::trunc(order);
  return {static_cast<int>(whole), order - whole};
}

FilterDesign oustaloup_synthesize(const OustaloupSpec& spec) {
  if (!std::isfinite(spec.order)) {
    throw std::invalid_argument("oustaloup: order must be finite");
  }
  if (spec.half_order < 1) {
    throw std::invalid_argument("oustaloup: half order N must be >= 1");
  }
  const double wb = spec.band.low;
  const double wh = spec.band.high;
  if (!(wb > 0.0) || !(wb < wh) || !std::isfinite(wh)) {
    throw std::invalid_argument("oustaloup: band must satisfy 0 < wb < wh");
  }

  FilterDesign design;
  const auto [integer_power, frac] = split_order(spec.order, spec.split);
  design.integer_power = integer_power;
  design.fractional_order = frac;

  const int n = spec.half_order;
  const double sections = 2.0 * n + 1.0;
  const double ratio = wh / wb;
  design.zeros.reserve(2 * n + 1);
  design.poles.reserve(2 * n + 1);
  for (int k = -n; k <= n; ++k) {
    design.zeros.push_back(
        wb * std::pow(ratio, (k + n + 0.5 * (1.0 - frac)) / sections));
    design.poles.push_back(
        wb * std::pow(ratio, (k + n + 0.5 * (1.0 + frac)) / sections));
  }
  design.gain = std::pow(wh, frac);
  return design;
}

std::complex<double> frequency_response(const FilterDesign& design,
                                        double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("frequency_response: omega must be > 0");
  }
  const std::complex<double> jw(0.0, omega);
  std::complex<double> h = design.gain;
  for (std::size_t k = 0; k < design.zeros.size(); ++k) {
    if (design.zeros[k] == design.poles[k]) continue;
    h *= (jw + design.zeros[k]) / (jw + design.poles[k]);
  }
  if (design.integer_power != 0) {
    h *= std::pow(jw, design.integer_power);
  }
  return h;
}

FractionalFilter::FractionalFilter(const FilterDesign& design, double dt,
                                   Discretization method)
    : design_(design), dt_(dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("filter: dt must be > 0");
  }
  for (std::size_t k = 0; k < design.zeros.size(); ++k) {
    const double z = design.zeros[k];
    const double p = design.poles[k];
    if (z == p) continue;  // exact unity section
    Section s;
    switch (method) {
      case Discretization::kTustin: {
        const double c = 2.0 / dt;
        s.b0 = (c + z) / (c + p);
        s.b1 = (z - c) / (c + p);
        s.a1 = (p - c) / (c + p);
        break;
      }
      case Discretization::kBackwardEuler: {
        const double den = 1.0 + p * dt;
        s.b0 = (1.0 + z * dt) / den;
        s.b1 = -1.0 / den;
        s.a1 = -1.0 / den;
        break;
      }
    }
    sections_.push_back(s);
  }
  const int m = design.integer_power;
  for (int i = 0; i < std::abs(m); ++i) {
    integer_stages_.push_back(IntegerStage{m > 0});
  }
}

double FractionalFilter::step(double input) {
  double v = input;
  for (auto& s : sections_) {
    const double y = s.b0 * v + s.b1 * s.x_prev - s.a1 * s.y_prev;
    s.x_prev = v;
    s.y_prev = y;
    v = y;
  }
  v *= design_.gain;
  for (auto& st : integer_stages_) {
    double y;
    if (st.differentiate) {
      y = (v - st.x_prev) / dt_;
    } else {
      y = st.y_prev + 0.5 * dt_ * (v + st.x_prev);
    }
    st.x_prev = v;
    st.y_prev = y;
    v = y;
  }
  return v;
}

void FractionalFilter::reset() {
  for (auto& s : sections_) s.x_prev = s.y_prev = 0.0;
  for (auto& st : integer_stages_) st.x_prev = st.y_prev = 0.0;
}

FractionalFilter make_fractional_filter(double order, double dt,
                                        int half_order, Band band,
                                        Discretization method,
                                        IntegerSplit split) {
  return FractionalFilter(
      oustaloup_synthesize(OustaloupSpec{order, half_order, band, split}), dt,
      method);
}

std::vector<double> gl_weights(double order, std::size_t count) {
  std::vector<double> w(count);
  if (count == 0) return w;
  w[0] = 1.0;
  for (std::size_t j = 1; j < count; ++j) {
    w[j] = w[j - 1] * (1.0 - (order + 1.0) / static_cast<double>(j));
  }
  return w;
}

std::vector<double> gl_differintegral(std::span<const double> signal,
                                      double order, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("gl_differintegral: dt must be > 0");
  }
  const std::size_t n = signal.size();
  const auto w = gl_weights(order, n);
  const double scale = std::pow(dt, -order);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) acc += w[j] * signal[i - j];
    out[i] = scale * acc;
  }
  return out;
}

}  // namespace frachz

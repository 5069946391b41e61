// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace frachz {

/// Fitting band of a rational approximation, in rad/s.
struct Band {
  double low = 1e-2;
  double high = 1e2;
};

/// How each first-order section is mapped to discrete time.
enum class Discretization {
  kTustin,
  kBackwardEuler,
};

/// How the integer power is taken out of an order before the rational fit.
enum class IntegerSplit {
  kTruncate,  // towards zero: -0.7 -> (0, -0.7), 1.5 -> (1, 0.5)
  kFloor,     // downwards: -0.7 -> (-1, 0.3), so integrators stay exact
};

/// Oustaloup approximation request for s^order.
///
/// `half_order` is N in the (2N+1)-section recursive filter.
struct OustaloupSpec {
  double order = 0.0;
  int half_order = 2;
  Band band{};
  IntegerSplit split = IntegerSplit::kTruncate;
};

/// Continuous-time zeros/poles/gain of an Oustaloup filter.
///
/// The transfer function is
///   gain * s^integer_power * prod_k (s + zeros[k]) / (s + poles[k]).
/// `fractional_order` is the part of the requested order that the rational
/// sections approximate; it always lies in (-1, 1).
struct FilterDesign {
  std::vector<double> zeros;
  std::vector<double> poles;
  double gain = 1.0;
  int integer_power = 0;
  double fractional_order = 0.0;
};

/// Splits an order into an integer power and a remainder in (-1, 1).
std::pair<int, double> split_order(
    double order, IntegerSplit split = IntegerSplit::kTruncate);

FilterDesign oustaloup_synthesize(const OustaloupSpec& spec);

/// Continuous-domain frequency response of `design` at `omega` rad/s.
std::complex<double> frequency_response(const FilterDesign& design,
                                        double omega);

/// Discrete-time executable form of a FilterDesign.
///
/// Every rational section is discretized independently at `dt`; the
/// integer power is applied afterwards as repeated backward differences
/// (positive powers) or trapezoidal accumulation (negative powers).
class FractionalFilter {
 public:
  FractionalFilter() = default;
  FractionalFilter(const FilterDesign& design, double dt,
                   Discretization method = Discretization::kTustin);

  double step(double input);
  void reset();

  double dt() const { return dt_; }
  const FilterDesign& design() const { return design_; }

 private:
  struct Section {
    // y[n] = b0 x[n] + b1 x[n-1] - a1 y[n-1]   (a0 normalized to 1)
    double b0 = 1.0;
    double b1 = 0.0;
    double a1 = 0.0;
    double x_prev = 0.0;
    double y_prev = 0.0;
  };
  struct IntegerStage {
    bool differentiate = true;
    double x_prev = 0.0;
    double y_prev = 0.0;
  };

  FilterDesign design_{};
  double dt_ = 0.0;
  std::vector<Section> sections_;
  std::vector<IntegerStage> integer_stages_;
};

/// Builds an executable filter for s^order in one call.
FractionalFilter make_fractional_filter(double order, double dt,
                                        int half_order = 2, Band band = {},
                                        Discretization method =
                                            Discretization::kTustin,
                                        IntegerSplit split =
                                            IntegerSplit::kTruncate);

/// Grünwald–Letnikov differ-integral with full memory and zero history:
///   y[n] = dt^-order * sum_{j=0..n} w_j x[n-j],
///   w_0 = 1, w_j = w_{j-1} (1 - (order + 1) / j).
std::vector<double> gl_differintegral(std::span<const double> signal,
                                      double order, double dt);

/// The binomial weights w_0..w_{count-1} used by gl_differintegral.
std::vector<double> gl_weights(double order, std::size_t count);

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "frachz/design.hpp"
#include "frachz/fracops.hpp"
#include "frachz/fuzzy.hpp"
#include "frachz/loop.hpp"
#include "frachz/registry.hpp"
#include "frachz/tuner.hpp"

namespace frachz {

/// Six significant digits, as used in every CSV column.
std::string format_number(double v);

// All writers emit a header row, LF line endings and fixed column order.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);
void write_surface_csv(std::ostream& os, const ControlSurface& s);
void write_pareto_csv(std::ostream& os, const ParetoArchive& archive,
                      Structure s, ObjectivePair pair);

struct FrequencyPoint {
  double omega;
  double mag_ideal;
  double mag_filter;
  double phase_ideal_deg;
  double phase_filter_deg;
};

/// Ideal s^order against the Oustaloup filter on log-spaced frequencies
/// spanning the band.
std::vector<FrequencyPoint> frequency_check(const OustaloupSpec& spec,
                                            int points);
void write_freqcheck_csv(std::ostream& os,
                         const std::vector<FrequencyPoint>& pts);

/// Opens `path` for writing and hands the stream to `write`. Throws
/// std::runtime_error when the file cannot be written.
void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& write);

void write_indices(std::ostream& os, const IndexReport& rep);

/// Per-plant loop configuration used when re-evaluating published rows.
struct ReproductionSettings {
  /// Applied on top of default_loop_settings(plant).
  std::function<LoopSettings(std::string_view plant)> loop =
      [](std::string_view p) { return default_loop_settings(p); };
  /// Tolerance band for the tracking verdict.
  double tracking_tolerance = 0.05;
  /// Length of the window right before the disturbance that must stay in band.
  double tracking_window = 1.0;
};

struct ReproductionRow {
  const PublishedRow* row = nullptr;
  double j_published = 0.0;
  double j_recomputed = 0.0;  // configured u_ss mode
  double j_alternate = 0.0;   // the other u_ss mode
  IndexReport indices;        // set-point-only run
  double istse_load = 0.0;    // disturbance window of the load run
  double tracking_error = 0.0;  // max |y - r| in the pre-disturbance window
  bool stable = true;
  bool tracks = true;
  LoopSettings loop;
  Scenario tuning_scenario;
  Scenario load_scenario;
};

struct ProcessRanking {
  std::string plant;
  double relative_dead_time = 0.0;
  std::vector<Structure> by_j;  // ascending recomputed J
  Structure best_tracking{};     // lowest J1
  Structure best_disturbance{};  // lowest J3
  Structure best_effort{};       // lowest J2
};

struct ReproductionReport {
  std::vector<ReproductionRow> rows;
  std::vector<ProcessRanking> rankings;
};

/// Re-simulates every row; unstable rows are reported, not fatal.
/// Throws std::invalid_argument on an empty registry.
ReproductionReport reproduce_tables(const std::vector<PublishedRow>& registry,
                                    const ReproductionSettings& settings = {});

void write_reproduction_csv(std::ostream& os, const ReproductionReport& rep);
/// Plain-text summary: settings, per-row comparison, per-process ranking.
void write_reproduction_summary(std::ostream& os,
                                const ReproductionReport& rep);

}  // namespace frachz

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace frachz {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,r,e,u,y\n";
  for (std::size_t n = 0; n < tr.size(); ++n) {
    os << format_number(tr.t[n]) << ',' << format_number(tr.r[n]) << ','
       << format_number(tr.e[n]) << ',' << format_number(tr.u[n]) << ','
       << format_number(tr.y[n]) << '\n';
  }
}

void write_surface_csv(std::ostream& os, const ControlSurface& s) {
  os << "e_norm,de_norm,u_norm\n";
  for (int r = 0; r < s.grid_n; ++r) {
    for (int c = 0; c < s.grid_n; ++c) {
      os << format_number(s.axis[r]) << ',' << format_number(s.axis[c]) << ','
         << format_number(s.at(r, c)) << '\n';
    }
  }
}

void write_pareto_csv(std::ostream& os, const ParetoArchive& archive,
                      Structure s, ObjectivePair pair) {
  os << "J1," << (pair == ObjectivePair::kTrackingEffort ? "J2" : "J3");
  for (auto name : parameter_names(s)) os << ',' << name;
  os << '\n';
  auto members = archive.members;
  std::stable_sort(members.begin(), members.end(), [](auto& a, auto& b) {
    return a.objectives[0] < b.objectives[0];
  });
  for (const auto& m : members) {
    os << format_number(m.objectives[0]) << ',' << format_number(m.objectives[1]);
    for (double p : m.params) os << ',' << format_number(p);
    os << '\n';
  }
}

std::vector<FrequencyPoint> frequency_check(const OustaloupSpec& spec,
                                            int points) {
  if (points < 2) throw std::invalid_argument("freqcheck: need >= 2 points");
  const FilterDesign design = oustaloup_synthesize(spec);
  const double lo = std::log10(spec.band.low);
  const double hi = std::log10(spec.band.high);
  constexpr double deg = 180.0 / std::numbers::pi;
  std::vector<FrequencyPoint> out;
  for (int i = 0; i < points; ++i) {
    const double w = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
    const auto h = frequency_response(design, w);
    out.push_back({w, std::pow(w, spec.order), std::abs(h), 90.0 * spec.order,
                   std::arg(h) * deg});
  }
  return out;
}

void write_freqcheck_csv(std::ostream& os,
                         const std::vector<FrequencyPoint>& pts) {
  os << "omega_rad_s,mag_ideal,mag_filter,phase_ideal_deg,phase_filter_deg\n";
  for (const auto& p : pts) {
    os << format_number(p.omega) << ',' << format_number(p.mag_ideal) << ','
       << format_number(p.mag_filter) << ',' << format_number(p.phase_ideal_deg)
       << ',' << format_number(p.phase_filter_deg) << '\n';
  }
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_indices(std::ostream& os, const IndexReport& rep) {
  os << "ISTSE_setpoint=" << format_number(rep.istse_setpoint) << '\n'
     << "ISDCO_setpoint=" << format_number(rep.isdco_setpoint) << '\n'
     << "ISTSE_load=" << format_number(rep.istse_load) << '\n'
     << "J_weighted=" << format_number(rep.weighted) << '\n'
     << "w1=" << format_number(rep.w1) << '\n'
     << "w2=" << format_number(rep.w2) << '\n'
     << "uss_mode=" << uss_mode_name(rep.uss_mode) << '\n'
     << "u_ss=" << format_number(rep.u_ss) << '\n';
}

ReproductionReport reproduce_tables(const std::vector<PublishedRow>& registry,
                                    const ReproductionSettings& settings) {
  if (registry.empty()) {
    throw std::invalid_argument("reproduce-tables: registry is empty");
  }
  ReproductionReport rep;
  for (const auto& row : registry) {
    ReproductionRow out;
    out.row = &row;
    out.j_published = row.j_min();
    out.loop = settings.loop(row.plant);
    const PlantModel plant = plant_preset(row.plant);
    const ControllerSpec spec = row.spec();

    out.tuning_scenario = default_scenario(row.plant, false);
    const Evaluation ev =
        evaluate_indices(plant, spec, out.tuning_scenario, out.loop);
    out.indices = ev.indices;
    out.j_recomputed = ev.stable ? ev.indices.weighted : kPenalty;
    LoopSettings alt = out.loop;
    alt.uss_mode =
        out.loop.uss_mode == UssMode::kDc ? UssMode::kZero : UssMode::kDc;
    out.j_alternate = evaluate_candidate(plant, spec, out.tuning_scenario, alt);

    out.load_scenario = default_scenario(row.plant, true);
    const Trajectory tr = simulate(plant, spec, out.load_scenario, out.loop);
    out.stable = ev.stable && tr.stable;
    out.istse_load = compute_indices(tr, out.load_scenario, out.loop).istse_load;
    const double t_d = *out.load_scenario.disturbance_time;
    double worst = 0.0;
    for (std::size_t n = 0; n < tr.size(); ++n) {
      if (tr.t[n] >= t_d - settings.tracking_window && tr.t[n] < t_d) {
        worst = std::max(worst, std::abs(tr.y[n] - tr.r[n]));
      }
    }
    out.tracking_error = tr.stable ? worst : std::numeric_limits<double>::infinity();
    out.tracks = out.stable && worst <= settings.tracking_tolerance;
    rep.rows.push_back(out);
  }

  std::map<std::string, std::vector<const ReproductionRow*>> by_plant;
  for (const auto& r : rep.rows) by_plant[std::string(r.row->plant)].push_back(&r);
  for (auto& [plant, rows] : by_plant) {
    ProcessRanking rk;
    rk.plant = plant;
    rk.relative_dead_time = relative_dead_time(plant_preset(plant));
    auto sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
      return a->j_recomputed < b->j_recomputed;
    });
    for (auto* r : sorted) rk.by_j.push_back(r->row->structure);
    const auto best = [&](auto key) {
      return (*std::min_element(rows.begin(), rows.end(),
                                [&](auto a, auto b) { return key(a) < key(b); }))
          ->row->structure;
    };
    rk.best_tracking = best([](auto r) { return r->indices.istse_setpoint; });
    rk.best_disturbance = best([](auto r) { return r->istse_load; });
    rk.best_effort = best([](auto r) { return r->indices.isdco_setpoint; });
    rep.rankings.push_back(rk);
  }
  return rep;
}

void write_reproduction_csv(std::ostream& os, const ReproductionReport& rep) {
  os << "process,structure,J_min_published,J_recomputed,ratio,J_alt_uss,"
        "J1,J2,J3,tracking_error,stable,tracks,uss_mode,dt,horizon\n";
  for (const auto& r : rep.rows) {
    os << r.row->plant << ',' << structure_tag(r.row->structure) << ','
       << r.row->j_min_text << ',' << format_number(r.j_recomputed) << ','
       << format_number(r.j_recomputed / r.j_published) << ','
       << format_number(r.j_alternate) << ','
       << format_number(r.indices.istse_setpoint) << ','
       << format_number(r.indices.isdco_setpoint) << ','
       << format_number(r.istse_load) << ','
       << format_number(r.tracking_error) << ',' << (r.stable ? 1 : 0) << ','
       << (r.tracks ? 1 : 0) << ',' << uss_mode_name(r.loop.uss_mode) << ','
       << format_number(r.loop.ops.dt) << ','
       << format_number(r.tuning_scenario.horizon) << '\n';
  }
}

void write_reproduction_summary(std::ostream& os,
                                const ReproductionReport& rep) {
  os << "Re-evaluation of published parameter sets\n";
  if (!rep.rows.empty()) {
    const auto& l = rep.rows.front().loop;
    os << "settings: band=[" << format_number(l.ops.band.low) << ", "
       << format_number(l.ops.band.high) << "] rad/s, N=" << l.ops.half_order
       << ", discretization="
       << (l.ops.method == Discretization::kTustin ? "tustin" : "backward-euler")
       << ", integrator="
       << (l.ops.integral_split == IntegerSplit::kFloor ? "exact" : "oustaloup")
       << ", uss_mode=" << uss_mode_name(l.uss_mode) << ", w1="
       << format_number(l.w1) << ", w2=" << format_number(l.w2)
       << "; J over a set-point-only run, load step at half horizon for J3\n";
  }
  for (const auto& r : rep.rows) {
    os << "  " << r.row->plant << "  " << structure_name(r.row->structure)
       << "  dt=" << format_number(r.loop.ops.dt)
       << " horizon=" << format_number(r.tuning_scenario.horizon)
       << "  J_min(published)=" << r.row->j_min_text
       << "  J(recomputed)=" << format_number(r.j_recomputed)
       << "  J(alt u_ss)=" << format_number(r.j_alternate)
       << (r.stable ? "" : "  UNSTABLE") << (r.tracks ? "" : "  NOT-TRACKING")
       << '\n';
  }
  for (const auto& rk : rep.rankings) {
    os << rk.plant << " (tau=" << format_number(rk.relative_dead_time)
       << "): ranking by J:";
    for (auto s : rk.by_j) os << ' ' << structure_tag(s);
    os << "; set-point tracking: " << structure_name(rk.best_tracking)
       << "; load rejection: " << structure_name(rk.best_disturbance)
       << "; small control signal: " << structure_name(rk.best_effort) << '\n';
  }
}

}  // namespace frachz

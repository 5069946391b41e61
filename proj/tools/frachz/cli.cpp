// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "frachz/config.hpp"
#include "frachz/design.hpp"
#include "frachz/registry.hpp"
#include "frachz/report.hpp"

namespace frachz::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::optional<double> dt;
  std::optional<std::string> band;
  std::optional<int> filter_order;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> uss_mode;
  std::optional<std::string> config;
  std::optional<std::string> integrator;
};

Band parse_band(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("--band expects WB,WH");
  }
  try {
    return Band{std::stod(text.substr(0, comma)),
                std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--band expects two numbers, got '" + text + "'");
  }
}

json plant_json(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_json_file(arg);
  return json(arg);
}

// Base config file, then --plant, then the global flag overrides.
RunConfig resolve(const GlobalOptions& g, const std::optional<std::string>& plant,
                  json* raw_scenario = nullptr) {
  json j = g.config ? read_json_file(*g.config) : json::object();
  if (!j.is_object()) throw ConfigError("config: expected an object");
  if (plant) j["plant"] = plant_json(*plant);
  if (raw_scenario != nullptr && j.contains("scenario")) {
    *raw_scenario = j["scenario"];
  }
  RunConfig rc = run_config_from_json(j);
  if (g.dt) rc.loop.ops.dt = *g.dt;
  if (g.band) rc.loop.ops.band = parse_band(*g.band);
  if (g.filter_order) rc.loop.ops.half_order = *g.filter_order;
  if (g.uss_mode) rc.loop.uss_mode = uss_mode_from_name(*g.uss_mode);
  if (g.integrator) {
    rc.loop.ops.integral_split = *g.integrator == "exact"
                                     ? IntegerSplit::kFloor
                                     : IntegerSplit::kTruncate;
  }
  if (g.seed) rc.seed = *g.seed;

  if (!(rc.loop.ops.dt > 0.0)) throw ConfigError("--dt must be > 0");
  if (!(rc.loop.ops.band.low > 0.0 &&
        rc.loop.ops.band.low < rc.loop.ops.band.high)) {
    throw ConfigError("--band must satisfy 0 < WB < WH");
  }
  if (rc.loop.ops.half_order < 1) throw ConfigError("--filter-order must be >= 1");
  if (rc.plant.dead_time > 0.0 && rc.loop.ops.dt > rc.plant.dead_time) {
    throw ConfigError("dt must not exceed the plant dead time");
  }
  return rc;
}

std::string preset_label(const RunConfig& rc) { return rc.plant_label; }

int cmd_freqcheck(double beta, int order, const std::string& band, int points,
                  const std::string& out_path, std::ostream& out) {
  const OustaloupSpec spec{beta, order, parse_band(band)};
  const auto pts = frequency_check(spec, points);
  write_file(out_path, [&](std::ostream& os) { write_freqcheck_csv(os, pts); });
  out << "wrote " << pts.size() << " frequency points to " << out_path << '\n';
  return kExitOk;
}

int cmd_surface(int grid, const std::string& out_path, std::ostream& out) {
  const auto surface = control_surface(*default_engine(), grid);
  write_file(out_path, [&](std::ostream& os) { write_surface_csv(os, surface); });
  out << "wrote " << grid * grid << " surface rows to " << out_path << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fractional-order hybrid fuzzy PID design toolkit", "frachz"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--dt", g.dt, "Loop sample time [s]");
  app.add_option("--band", g.band, "Oustaloup fitting band WB,WH [rad/s]");
  app.add_option("--filter-order", g.filter_order, "Oustaloup half order N");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--uss-mode", g.uss_mode, "Steady control reference (dc|zero)")
      ->check(CLI::IsMember({"dc", "zero"}));
  app.add_option("--integrator", g.integrator,
                 "Controller I^lambda realization (exact|oustaloup)")
      ->check(CLI::IsMember({"exact", "oustaloup"}));
  app.add_option("--config", g.config, "JSON run configuration");

  // freqcheck
  auto* freq = app.add_subcommand("freqcheck", "Oustaloup filter vs ideal s^beta");
  double beta = 0.5;
  int order = 2;
  std::string fband = "0.01,100";
  int points = 200;
  std::string freq_out;
  freq->add_option("--beta", beta, "Differ-integration order")->required();
  freq->add_option("--order", order, "Half order N (2N+1 sections)");
  freq->add_option("--band", fband, "Fitting band WB,WH");
  freq->add_option("--points", points, "Number of log-spaced frequencies");
  freq->add_option("--out", freq_out, "Output CSV")->required();

  // surface
  auto* surf = app.add_subcommand("surface", "Fuzzy control surface");
  int grid = 101;
  std::string surf_out;
  surf->add_option("--grid", grid, "Grid points per axis");
  surf->add_option("--out", surf_out, "Output CSV")->required();

  // simulate
  auto* sim = app.add_subcommand("simulate", "Closed-loop simulation");
  std::optional<std::string> sim_plant;
  std::optional<std::string> sim_ctl;
  std::optional<std::string> sim_sc;
  std::optional<std::string> sim_out;
  bool sim_indices = false;
  sim->add_option("--plant", sim_plant, "Preset (gp1|gp2|gp3) or plant JSON");
  sim->add_option("--controller", sim_ctl, "Controller spec JSON");
  sim->add_option("--scenario", sim_sc, "Scenario JSON");
  sim->add_option("--out", sim_out, "Trajectory CSV");
  sim->add_flag("--indices", sim_indices, "Print the index report");

  // tune
  auto* tune = app.add_subcommand("tune", "Single-objective GA tuning");
  std::optional<std::string> tune_plant;
  std::string tune_structure;
  std::optional<std::size_t> tune_gens;
  std::optional<std::size_t> tune_restarts;
  std::string tune_out;
  tune->add_option("--plant", tune_plant, "Preset or plant JSON");
  tune->add_option("--structure", tune_structure, "Controller structure tag")
      ->required();
  tune->add_option("--generations", tune_gens, "Maximum generations");
  tune->add_option("--restarts", tune_restarts,
                   "Independent runs with seeds seed, seed+1, ...");
  tune->add_option("--out", tune_out, "Best controller spec JSON")->required();

  // pareto
  auto* pareto = app.add_subcommand("pareto", "NSGA-II trade-off front");
  std::optional<std::string> par_plant;
  std::string par_structure;
  std::string par_objectives = "tracking-effort";
  std::optional<std::size_t> par_gens;
  std::optional<std::size_t> par_pop;
  std::string par_out;
  pareto->add_option("--plant", par_plant, "Preset or plant JSON");
  pareto->add_option("--structure", par_structure, "Controller structure tag")
      ->required();
  pareto->add_option("--objectives", par_objectives,
                     "tracking-effort | tracking-disturbance")
      ->check(CLI::IsMember({"tracking-effort", "tracking-disturbance"}));
  pareto->add_option("--generations", par_gens, "Generations");
  pareto->add_option("--pop", par_pop, "Population size");
  pareto->add_option("--out", par_out, "Front CSV")->required();

  // reproduce-tables
  auto* repro = app.add_subcommand("reproduce-tables",
                                   "Re-evaluate the published parameter sets");
  std::optional<std::string> repro_out;
  std::optional<std::string> repro_summary;
  repro->add_option("--out", repro_out, "Comparison CSV");
  repro->add_option("--summary", repro_summary, "Plain-text summary file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*freq) return cmd_freqcheck(beta, order, fband, points, freq_out, out);
    if (*surf) return cmd_surface(grid, surf_out, out);

    if (*sim) {
      json raw_sc;
      RunConfig rc = resolve(g, sim_plant, &raw_sc);
      if (sim_ctl) rc.controller = controller_from_json(read_json_file(*sim_ctl));
      if (!rc.controller) throw ConfigError("simulate: --controller is required");
      Scenario sc = default_scenario(preset_label(rc), true);
      if (!raw_sc.is_null()) sc = scenario_from_json(raw_sc, sc);
      if (sim_sc) sc = scenario_from_json(read_json_file(*sim_sc), sc);

      const Trajectory tr = simulate(rc.plant, *rc.controller, sc, rc.loop);
      if (sim_out) {
        write_file(*sim_out, [&](std::ostream& os) { write_trajectory_csv(os, tr); });
      }
      if (sim_indices) write_indices(out, compute_indices(tr, sc, rc.loop));
      if (!tr.stable) {
        err << "simulate: closed loop diverged at t="
            << format_number(tr.t.empty() ? 0.0 : tr.t.back()) << " s\n";
        return kExitUnstable;
      }
      return kExitOk;
    }

    if (*tune) {
      RunConfig rc = resolve(g, tune_plant);
      const Structure s = structure_from_tag(tune_structure);
      GaConfig cfg;
      cfg.pop_size = rc.tuner.pop_size;
      cfg.elite_count = rc.tuner.elite_count;
      cfg.ops.crossover_ratio = rc.tuner.crossover_ratio;
      cfg.ops.mutation_ratio = rc.tuner.mutation_ratio;
      cfg.max_generations = tune_gens.value_or(rc.tuner.generations);
      cfg.tolerance = rc.tuner.tolerance;
      cfg.workers = rc.tuner.workers;
      cfg.seed = rc.seed;
      std::vector<std::uint64_t> seeds = rc.tuner.seeds;
      if (tune_restarts) {
        seeds.clear();
        for (std::size_t i = 0; i < *tune_restarts; ++i) seeds.push_back(rc.seed + i);
      }
      const auto res = tune_controller(rc.plant, s, rc.scenario, rc.loop, cfg, seeds);
      write_json_file(tune_out, to_json(res.spec));
      out << "best J=" << format_number(res.fitness) << " after "
          << res.ga.history.size() - 1 << " generations ("
          << res.ga.evaluations << " evaluations), wrote " << tune_out << '\n';
      if (res.fitness >= kPenalty) {
        err << "tune: warning: no stable candidate found; try more generations\n";
      }
      return kExitOk;
    }

    if (*pareto) {
      RunConfig rc = resolve(g, par_plant);
      const Structure s = structure_from_tag(par_structure);
      const ObjectivePair pair = objective_pair_from_tag(par_objectives);
      Scenario sc = rc.scenario;
      if (pair == ObjectivePair::kTrackingDisturbance && !sc.disturbance_time) {
        sc.disturbance_time = sc.horizon / 2.0;
      }
      Nsga2Config cfg;
      cfg.pop_size = par_pop.value_or(100);
      cfg.pareto_fraction = rc.tuner.pareto_fraction;
      cfg.ops.crossover_ratio = rc.tuner.crossover_ratio;
      cfg.ops.mutation_ratio = rc.tuner.mutation_ratio;
      cfg.max_generations = par_gens.value_or(50);
      cfg.seed = rc.seed;
      cfg.workers = rc.tuner.workers;
      const auto archive = pareto_controller(rc.plant, s, pair, sc, rc.loop, cfg);
      write_file(par_out, [&](std::ostream& os) {
        write_pareto_csv(os, archive, s, pair);
      });
      out << "front of " << archive.members.size() << " members written to "
          << par_out << '\n';
      return kExitOk;
    }

    if (*repro) {
      const RunConfig base = resolve(g, std::nullopt);
      ReproductionSettings rs;
      rs.loop = [&](std::string_view plant) {
        LoopSettings l = default_loop_settings(plant);
        if (g.dt) l.ops.dt = *g.dt;
        l.ops.band = base.loop.ops.band;
        l.ops.half_order = base.loop.ops.half_order;
        l.ops.method = base.loop.ops.method;
        l.ops.integral_split = base.loop.ops.integral_split;
        l.uss_mode = base.loop.uss_mode;
        l.w1 = base.loop.w1;
        l.w2 = base.loop.w2;
        return l;
      };
      const auto rep = reproduce_tables(published_rows(), rs);
      write_reproduction_summary(out, rep);
      if (repro_out) {
        write_file(*repro_out, [&](std::ostream& os) { write_reproduction_csv(os, rep); });
      }
      if (repro_summary) {
        write_file(*repro_summary,
                   [&](std::ostream& os) { write_reproduction_summary(os, rep); });
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace frachz::cli

// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "frachz/config.hpp"
#include "frachz/registry.hpp"
#include "frachz/report.hpp"

using namespace frachz;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) out.push_back(cell);
  return out;
}

// Process, structure, J_min, then parameter values in column order.
const char* const kPublished[] = {
    "gp1 fuzzy-pid 38.20247 0.887976 0.63353 1.417276 0.820367 0.959188 0.994714",
    "gp2 fuzzy-pid 7.630405 0.098897 0.102872 0.728721 0.787448 0.998849 0.992102",
    "gp3 fuzzy-pid 39.6631 0.666385 0.214853 0.801473 0.321055 0.998524 0.288179",
    "gp1 fuzzy-pi-pd 38.17563 0.957059 0.74568 1.506117 0.725838 0.872039 0.882793 0.932188 0.982342",
    "gp2 fuzzy-pi-pd 3.752172 0.177834 0.016532 0.636613 0.299998 0.765192 0.287097 0.976782 0.810926",
    "gp3 fuzzy-pi-pd 39.64602 0.848295 0.209849 0.843522 0.295589 0.209216 0.487242 0.971632 0.436048",
    "gp1 fuzzy-p-id 38.1687 0.339126 0.81547 0.594271 1.924765 1.806937 0.882179 0.973166 0.177353",
    "gp2 fuzzy-p-id 3.631472 0.007836 0.288275 0.650441 0.131799 0.17253 0.973567 0.769968 0.05902",
    "gp3 fuzzy-p-id 39.69599 0.64044 0.094509 0.301722 0.161946 0.657659 0.972741 0.998061 0.00964",
    "gp1 fuzzy-pi-d 38.21658 0.658696 0.328859 2.02627 1.314265 0.883782 0.707495 0.432665",
    "gp2 fuzzy-pi-d 6.67324 0.435695 0.240776 0.379578 0.314335 0.873519 0.59048 0.753619",
    "gp3 fuzzy-pi-d 39.89151 0.712596 0.20361 1.06411 0.220181 0.940606 0.607729 0.429407",
    "gp1 fuzzy-pd-i 38.22424 0.207274 0.59619 0.639649 1.039919 0.983022 0.599213",
    "gp2 fuzzy-pd-i 3.297377 0.056807 0.211725 0.113836 0.828508 0.989822 0.723279",
    "gp3 fuzzy-pd-i 39.67555 0.344379 0.5251 0.626799 0.33055 0.96105 0.28574",
};

}  // namespace

TEST_CASE("registry reproduces the published digits") {
  REQUIRE(published_rows().size() == 15);
  for (const char* line : kPublished) {
    const auto cells = split(line, ' ');
    const auto& row = published_row(cells[0], structure_from_tag(cells[1]));
    CAPTURE(line);
    CHECK(row.j_min_text == cells[2]);
    REQUIRE(row.value_text.size() == cells.size() - 3);
    for (std::size_t k = 0; k < row.value_text.size(); ++k) {
      CHECK(row.value_text[k] == cells[k + 3]);
    }
    CHECK(row.j_min() == std::stod(cells[2]));
    CHECK_NOTHROW(validate(row.spec()));
    CHECK(row.spec().to_vector()[0] == std::stod(cells[3]));
  }
  CHECK_THROWS_AS(published_row("gp4", Structure::kFuzzyPID), std::invalid_argument);
}

TEST_CASE("controller spec round trip") {
  for (const auto& row : published_rows()) {
    const auto spec = row.spec();
    const json j = to_json(spec);
    CHECK(j["structure"] == structure_tag(spec.structure));
    CHECK(controller_from_json(json::parse(j.dump())) == spec);
  }
  CHECK_THROWS_AS(controller_from_json(json{{"structure", "fuzzy-pid"}}), ConfigError);
  CHECK_THROWS_AS(controller_from_json(json{{"structure", "pid"}, {"parameters", json::object()}}),
                  ConfigError);
  auto j = to_json(published_rows()[0].spec());
  j["parameters"]["K_e"] = 3.0;
  CHECK_THROWS_AS(controller_from_json(j), ConfigError);
  j = to_json(published_rows()[0].spec());
  j["gain"] = 1;
  CHECK_THROWS_AS(controller_from_json(j), ConfigError);
}

TEST_CASE("plant, scenario and loop blocks") {
  CHECK(plant_from_json(json("gp2")) == plant_preset("gp2"));
  const auto m = plant_from_json(json{{"K", 2.0}, {"T", 0.5}, {"alpha", 1.2}, {"L", 0.3}});
  CHECK(m == PlantModel{2.0, 0.5, 1.2, 0.3});
  CHECK(plant_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(plant_from_json(json{{"K", 2.0}, {"T", 0.5}, {"alpha", 2.5}, {"L", 0.3}}),
                  ConfigError);
  CHECK_THROWS_AS(plant_from_json(json("gp9")), ConfigError);

  Scenario sc;
  sc.horizon = 30;
  sc.disturbance_time = 12;
  sc.disturbance_mag = -0.5;
  const auto back = scenario_from_json(to_json(sc));
  CHECK(back.horizon == 30);
  CHECK(*back.disturbance_time == 12);
  CHECK(back.disturbance_mag == -0.5);
  CHECK_THROWS_AS(scenario_from_json(json{{"horizon", 10}, {"disturbance_time", 20}}),
                  ConfigError);

  const auto loop = loop_settings_from_json(
      json{{"dt", 0.002}, {"band", {0.001, 1000}}, {"filter_order", 3},
           {"discretization", "backward-euler"}, {"integrator", "oustaloup"},
           {"uss_mode", "zero"}, {"weights", {2, 1}}, {"actuator_limit", 4}},
      LoopSettings{});
  CHECK(loop.ops.dt == 0.002);
  CHECK(loop.ops.band.high == 1000);
  CHECK(loop.ops.half_order == 3);
  CHECK(loop.ops.method == Discretization::kBackwardEuler);
  CHECK(loop.ops.integral_split == IntegerSplit::kTruncate);
  CHECK(loop.uss_mode == UssMode::kZero);
  CHECK(loop.w1 == 2);
  CHECK(*loop.actuator_limit == 4);
  const auto again = loop_settings_from_json(to_json(loop), LoopSettings{});
  CHECK(to_json(again) == to_json(loop));
  CHECK_THROWS_AS(loop_settings_from_json(json{{"dt", -1}}, {}), ConfigError);
  CHECK_THROWS_AS(loop_settings_from_json(json{{"step", 1}}, {}), ConfigError);
  CHECK_THROWS_AS(loop_settings_from_json(json{{"integrator", "gl"}}, {}), ConfigError);
}

TEST_CASE("run config") {
  const auto rc = run_config_from_json(json::parse(R"({
    "plant": "gp1",
    "controller": {"structure": "fuzzy-pd-i",
                   "parameters": {"K_e": 0.2, "K_d": 0.5, "K_i": 0.6,
                                  "K_PD": 1.0, "lambda": 0.9, "mu": 0.6}},
    "loop": {"uss_mode": "zero"},
    "tuner": {"generations": 7, "seeds": [4, 5]},
    "seed": 11
  })"));
  CHECK(rc.plant == plant_preset("gp1"));
  CHECK(rc.loop.ops.dt == 0.005);
  CHECK(rc.loop.uss_mode == UssMode::kZero);
  CHECK(rc.scenario.horizon == 40.0);
  CHECK(rc.tuner.generations == 7);
  CHECK(rc.tuner.seeds == std::vector<std::uint64_t>{4, 5});
  CHECK(rc.seed == 11);
  REQUIRE(rc.controller);
  CHECK(rc.controller->structure == Structure::kFuzzyPDplusI);

  CHECK(run_config_from_json(json::object()).loop.ops.dt == 0.005);
  CHECK_THROWS_AS(run_config_from_json(json{{"plot", true}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json(json{{"tuner", {{"pop", 5}}}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json(json{{"plant", "gp1"}, {"loop", {{"dt", 0.2}}}}),
                  ConfigError);
  CHECK_THROWS_AS(run_config_from_json(json{{"seed", -3}}), ConfigError);
}

TEST_CASE("json files accept comments") {
  const auto path = std::filesystem::temp_directory_path() / "frachz_cfg_test.json";
  {
    std::ofstream out(path);
    out << "// controller\n{\"structure\": \"fuzzy-pid\", /* inline */ \"parameters\": {}}\n";
  }
  const auto j = read_json_file(path);
  CHECK(j["structure"] == "fuzzy-pid");
  write_json_file(path, json{{"a", 1}});
  CHECK(read_json_file(path)["a"] == 1);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path), ConfigError);
}

TEST_CASE("csv formats") {
  CHECK(format_number(3.14159265) == "3.14159");
  CHECK(format_number(1234567.0) == "1.23457e+06");
  CHECK(format_number(0.0) == "0");

  Trajectory tr;
  tr.dt = 0.1;
  tr.t = {0.0, 0.1};
  tr.r = {1.0, 1.0};
  tr.e = {1.0, 0.75};
  tr.u = {0.5, 0.6};
  tr.y = {0.0, 0.25};
  std::ostringstream os;
  write_trajectory_csv(os, tr);
  CHECK(os.str() == "t,r,e,u,y\n0,1,1,0.5,0\n0.1,1,0.75,0.6,0.25\n");

  ParetoArchive archive;
  archive.members.push_back({{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}, {2.0, 1.0}, 1, 0.0});
  archive.members.push_back({{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8}, {1.0, 2.0}, 1, 0.0});
  std::ostringstream ps;
  write_pareto_csv(ps, archive, Structure::kFuzzyPIplusD, ObjectivePair::kTrackingDisturbance);
  const auto lines = split(ps.str(), '\n');
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "J1,J3,K_e,K_d1,K_PI,K_d2,lambda,mu1,mu2");
  CHECK(lines[1].rfind("1,2,", 0) == 0);

  std::ostringstream fs;
  write_freqcheck_csv(fs, frequency_check(OustaloupSpec{0.5}, 5));
  CHECK(split(fs.str(), '\n').front() ==
        "omega_rad_s,mag_ideal,mag_filter,phase_ideal_deg,phase_filter_deg");
  CHECK(split(fs.str(), '\n').size() == 6);

  CHECK_THROWS_AS(write_file("/nonexistent-dir/x.csv", [](std::ostream&) {}),
                  std::runtime_error);
}

TEST_CASE("reproduction report") {
  CHECK_THROWS_AS(reproduce_tables({}), std::invalid_argument);
  const std::vector<PublishedRow> one = {published_row("gp2", Structure::kFuzzyPplusID)};
  const auto rep = reproduce_tables(one);
  REQUIRE(rep.rows.size() == 1);
  const auto& r = rep.rows[0];
  CHECK(r.j_published == 3.631472);
  CHECK(r.stable);
  CHECK(r.tracks);
  CHECK(r.j_recomputed > 0.0);
  CHECK(r.j_alternate > r.j_recomputed);
  std::ostringstream os;
  write_reproduction_summary(os, rep);
  CHECK(os.str().find("3.631472") != std::string::npos);
  std::ostringstream cs;
  write_reproduction_csv(cs, rep);
  CHECK(split(cs.str(), '\n').size() == 2);
}

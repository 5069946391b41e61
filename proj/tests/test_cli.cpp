// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frachz/cli.hpp"
#include "frachz/config.hpp"

namespace fs = std::filesystem;
using namespace frachz;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "frachz");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> v;
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("frachz_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("freqcheck") {
  TempDir dir;
  const auto r = invoke({"freqcheck", "--beta", "0.5", "--order", "2", "--band",
                      "0.01,100", "--out", dir / "resp.csv"});
  CHECK(r.code == cli::kExitOk);
  const auto l = lines(dir / "resp.csv");
  REQUIRE(l.size() == 201);
  CHECK(l[0] == "omega_rad_s,mag_ideal,mag_filter,phase_ideal_deg,phase_filter_deg");
  CHECK(invoke({"freqcheck", "--beta", "0.5", "--band", "100,1", "--out",
             dir / "x.csv"}).code == cli::kExitValidation);
}

TEST_CASE("surface") {
  TempDir dir;
  CHECK(invoke({"surface", "--out", dir / "s.csv"}).code == cli::kExitOk);
  const auto l = lines(dir / "s.csv");
  CHECK(l.size() == 101 * 101 + 1);
  CHECK(l[0] == "e_norm,de_norm,u_norm");
  CHECK(l[1].rfind("-1,-1,-0.8888", 0) == 0);
  CHECK(invoke({"surface", "--grid", "1", "--out", dir / "s.csv"}).code ==
        cli::kExitValidation);
}

TEST_CASE("tune then simulate") {
  TempDir dir;
  const auto t = invoke({"--seed", "3", "tune", "--plant", "gp1", "--structure",
                      "fuzzy-pd-i", "--generations", "2", "--out", dir / "best.json"});
  REQUIRE(t.code == cli::kExitOk);
  CHECK(t.err.empty());
  const auto spec = controller_from_json(read_json_file(dir / "best.json"));
  CHECK(spec.structure == Structure::kFuzzyPDplusI);
  // Written spec re-parses to itself.
  write_json_file(dir / "again.json", to_json(spec));
  CHECK(controller_from_json(read_json_file(dir / "again.json")) == spec);

  const auto s = invoke({"simulate", "--plant", "gp1", "--controller",
                      dir / "best.json", "--out", dir / "traj.csv", "--indices"});
  CHECK(s.code == cli::kExitOk);
  CHECK(s.out.find("ISTSE_setpoint=") != std::string::npos);
  const auto l = lines(dir / "traj.csv");
  CHECK(l[0] == "t,r,e,u,y");
  CHECK(l.size() == 8001);
}

TEST_CASE("simulate exit codes") {
  TempDir dir;
  write_json_file(dir / "wild.json",
                  nlohmann::json::parse(R"({"structure": "fuzzy-pd-i",
      "parameters": {"K_e": 1, "K_d": 0, "K_i": 40, "K_PD": 40,
                     "lambda": 2, "mu": 0}})"));
  CHECK(invoke({"simulate", "--plant", "gp2", "--controller", dir / "wild.json"}).code ==
        cli::kExitUnstable);

  write_json_file(dir / "bad.json",
                  nlohmann::json::parse(R"({"structure": "fuzzy-pd-i",
      "parameters": {"K_e": 5, "K_d": 0, "K_i": 1, "K_PD": 1,
                     "lambda": 1, "mu": 0}})"));
  const auto bad = invoke({"simulate", "--plant", "gp2", "--controller", dir / "bad.json"});
  CHECK(bad.code == cli::kExitValidation);
  CHECK(bad.err.find("K_e") != std::string::npos);

  const auto hopeless = invoke({"--seed", "3", "tune", "--plant", "gp2", "--structure",
                               "fuzzy-pd-i", "--generations", "2", "--out",
                               dir / "none.json"});
  CHECK(hopeless.code == cli::kExitOk);
  CHECK(hopeless.err.find("no stable candidate") != std::string::npos);

  CHECK(invoke({"simulate", "--plant", "gp2"}).code == cli::kExitValidation);
  CHECK(invoke({"simulate", "--plant", "gp7", "--controller", dir / "wild.json"}).code ==
        cli::kExitValidation);
  CHECK(invoke({"--uss-mode", "mean", "surface", "--out", dir / "s.csv"}).code ==
        cli::kExitValidation);
  CHECK(invoke({"--dt", "0.5", "simulate", "--plant", "gp1", "--controller",
             dir / "wild.json"}).code == cli::kExitValidation);
  CHECK(invoke({"no-such-command"}).code == cli::kExitValidation);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("config file drives the run") {
  TempDir dir;
  std::ofstream(dir / "run.json") << R"({
    // comments are allowed
    "plant": {"K": 1, "T": 1.0, "alpha": 1.2, "L": 0.2},
    "controller": {"structure": "fuzzy-pid",
                   "parameters": {"K_e": 0.5, "K_d": 0.3, "K_PI": 1.0,
                                  "K_PD": 0.5, "lambda": 0.9, "mu": 0.8}},
    "scenario": {"horizon": 10, "disturbance_time": 5},
    "loop": {"dt": 0.01, "uss_mode": "zero"}
  })";
  const auto r = invoke({"--config", dir / "run.json", "simulate", "--out",
                      dir / "t.csv", "--indices"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("uss_mode=zero") != std::string::npos);
  CHECK(lines(dir / "t.csv").size() == 1001);

  std::ofstream(dir / "typo.json") << R"({"plnat": "gp1"})";
  CHECK(invoke({"--config", dir / "typo.json", "tune", "--structure", "fuzzy-pid",
             "--out", dir / "b.json"}).code == cli::kExitValidation);
}

TEST_CASE("pareto") {
  TempDir dir;
  const auto r = invoke({"pareto", "--plant", "gp3", "--structure", "fuzzy-p-id",
                      "--objectives", "tracking-disturbance", "--generations",
                      "2", "--pop", "12", "--out", dir / "front.csv"});
  CHECK(r.code == cli::kExitOk);
  const auto l = lines(dir / "front.csv");
  REQUIRE(l.size() >= 2);
  CHECK(l[0] == "J1,J3,K_e,K_d1,K_p,K_d2,K_i,lambda,mu1,mu2");
  CHECK(invoke({"pareto", "--structure", "fuzzy-p-id", "--objectives", "speed",
             "--out", dir / "f.csv"}).code == cli::kExitValidation);
}

TEST_CASE("reproduce-tables") {
  TempDir dir;
  const auto r = invoke({"--uss-mode", "zero", "reproduce-tables", "--out",
                      dir / "rep.csv", "--summary", dir / "rep.txt"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("uss_mode=zero") != std::string::npos);
  CHECK(lines(dir / "rep.csv").size() == 16);
  CHECK(fs::exists(dir / "rep.txt"));
}

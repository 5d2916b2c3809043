// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

// End-to-end checks of the installed binary: exit codes, manifest
// contract, and byte-identical reruns.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "tetherhop/io/csv.hpp"

#ifndef TETHERHOP_BIN
#error "TETHERHOP_BIN must point at the CLI binary"
#endif
#ifndef TETHERHOP_CONFIG_DIR
#error "TETHERHOP_CONFIG_DIR must point at the shipped configs"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string bin() { return TETHERHOP_BIN; }
std::string config(const std::string& name) {
  return (fs::path(TETHERHOP_CONFIG_DIR) / name).string();
}

std::string fresh_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("tetherhop_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

int run(const std::string& args) {
  const std::string cmd = bin() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

bool same_bytes(const std::string& a, const std::string& b) {
  return tetherhop::io::read_text_file(a) == tetherhop::io::read_text_file(b);
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("definitely-not-a-subcommand") == 2);
  CHECK(run("plan --heightmap missing.csv") == 2);   // required flags absent
  CHECK(run("simulate --scenario /nonexistent.json") == 2);
}

TEST_CASE("simulate writes trajectory, summary and a complete manifest") {
  const std::string out = fresh_dir("sim");
  const int code = run("simulate --scenario " + config("climb_up.json") +
                       " --n-hops 6 --out " + out);
  CHECK(code == 0);

  const json manifest =
      json::parse(tetherhop::io::read_text_file(out + "/manifest.json"));
  CHECK(manifest["subcommand"] == "simulate");
  CHECK(manifest["config"].contains("world"));
  REQUIRE(manifest["outputs"].is_array());
  // Every output file referenced by the manifest exists, and every
  // artifact in the directory is referenced (manifest itself aside).
  std::size_t found = 0;
  for (const auto& f : manifest["outputs"]) {
    CHECK(fs::exists(f.get<std::string>()));
    ++found;
  }
  std::size_t present = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    if (entry.path().filename() != "manifest.json") ++present;
  }
  CHECK(found == present);

  const json summary =
      json::parse(tetherhop::io::read_text_file(out + "/summary.json"));
  CHECK(summary["aborted"] == false);
  CHECK(summary["hops"].size() == 6);
  CHECK(summary.contains("energy"));

  std::ifstream stairs(out + "/staircase.csv");
  std::string header;
  std::getline(stairs, header);
  CHECK(header == "t,y_robot0,y_robot1,y_robot2,y_payload");
}

TEST_CASE("re-runs with the same config produce byte-identical outputs") {
  const std::string out1 = fresh_dir("det1");
  const std::string out2 = fresh_dir("det2");
  const std::string args = "simulate --scenario " + config("climb_up.json") +
                           " --n-hops 4";
  REQUIRE(run(args + " --out " + out1) == 0);
  REQUIRE(run(args + " --out " + out2) == 0);
  for (const char* f : {"trajectory.csv", "staircase.csv", "summary.json"}) {
    CHECK(same_bytes(out1 + "/" + f, out2 + "/" + f));
  }

  const std::string p1 = fresh_dir("plan1");
  const std::string p2 = fresh_dir("plan2");
  const std::string plan_args =
      "plan --heightmap " + config("terrain_ridges.csv") + " --config " +
      config("plan_ridges.json") + " --seed 2026";
  REQUIRE(run(plan_args + " --out " + p1) == 0);
  REQUIRE(run(plan_args + " --out " + p2) == 0);
  for (const char* f : {"path_robot0.csv", "path_robot1.csv",
                        "path_robot2.csv", "path_payload.csv",
                        "plan_meta.json"}) {
    CHECK(same_bytes(p1 + "/" + f, p2 + "/" + f));
  }

  const std::string s1 = fresh_dir("surf1");
  const std::string s2 = fresh_dir("surf2");
  const std::string surf_args = "surface --rms 50e-6 --extent 2e-3 --seed 9";
  REQUIRE(run(surf_args + " --out " + s1) == 0);
  REQUIRE(run(surf_args + " --out " + s2) == 0);
  for (const char* f : {"surface.csv", "profile.csv", "report.json"}) {
    CHECK(same_bytes(s1 + "/" + f, s2 + "/" + f));
  }
}

TEST_CASE("hopsolve reports infeasibility with the required thrust, exit 1") {
  const std::string out = fresh_dir("hopinf");
  CHECK(run("hopsolve --rtau 0,9,0 --theta-deg 15 --tmax 5 --out " + out) ==
        1);
  const json sol =
      json::parse(tetherhop::io::read_text_file(out + "/hop_solution.json"));
  CHECK(sol["feasible"] == false);
  CHECK(sol["min_required_thrust"].get<double>() > 5.0);

  const std::string ok = fresh_dir("hopok");
  CHECK(run("hopsolve --rtau 0,1,0 --theta-deg 15 --tmax 20 --out " + ok) ==
        0);
  const json good =
      json::parse(tetherhop::io::read_text_file(ok + "/hop_solution.json"));
  CHECK(good["feasible"] == true);
  CHECK(good["thrust_norm"].get<double>() <= 20.0);
}

TEST_CASE("surface requires the full material set or none") {
  const std::string out = fresh_dir("surfbad");
  CHECK(run("surface --rms 50e-6 --extent 2e-3 --sigma-max 1e9 --out " +
            out) == 2);
  CHECK(run("surface --rms 50e-6 --extent 2e-3 --sigma-max 1e9 "
            "--emod 200e9 --nu 0.3 --spines 10 --out " +
            out) == 0);
}

// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "berlab/report.hpp"

using namespace berlab;

TEST_CASE("complex and matrix JSON round trips") {
  Complex z(1.5, -2.25);
  CHECK(complex_from_json(complex_to_json(z)) == z);
  Matrix m(2, 2);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(complex_from_json(json::array({1.0})), ConfigError);
}

TEST_CASE("certificate serialization keeps every field") {
  Certificate c;
  c.theorem_id = "young-scalar";
  c.lhs = 1.0;
  c.rhs = 2.0;
  c.gap = 1.0;
  c.holds = true;
  c.witness_index = 7;
  c.mode = CertMode::Pointwise;
  c.params["alpha"] = 0.5;
  json j = certificate_to_json(c);
  CHECK(j["theoremId"] == "young-scalar");
  CHECK(j["mode"] == "pointwise");
  CHECK(j["lhs"] == 1.0);
  CHECK(j["rhs"] == 2.0);
  CHECK(j["holds"] == true);
  CHECK(j["witnessIndex"] == 7);
  CHECK(j["params"]["alpha"] == 0.5);
}

TEST_CASE("config parsing with defaults and overrides") {
  json j = json::parse(R"({
    "spaces": [
      {"model": "diagonal", "dim": 3},
      {"model": "hardy", "dim": 5, "grid": {"type": "disc", "radial": 4, "angular": 8, "rmax": 0.8}}
    ],
    "suites": ["young-scalar", {"id": "thm-power-young", "p": [2.0], "alpha": [2.0]}],
    "trials": 7,
    "masterSeed": 11,
    "conditionCap": 50.0,
    "tolRel": 1e-8,
    "mode": "tighten"
  })");
  RunConfig c = parse_config(j);
  REQUIRE(c.spaces.size() == 2);
  CHECK(c.spaces[0].model == ModelKind::Diagonal);
  CHECK(c.spaces[1].grid.kind == GridKind::DiscPolar);
  CHECK(c.spaces[1].grid.rmax == 0.8);
  REQUIRE(c.suites.size() == 2);
  CHECK(c.suites[0].id == "young-scalar");
  CHECK(c.suites[1].params.p == std::vector<double>{2.0});
  CHECK(c.trials == 7);
  CHECK(c.master_seed == 11);
  CHECK(c.condition_cap == 50.0);
  CHECK(c.tol.rel == 1e-8);
  CHECK(c.mode == RunMode::Tighten);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"mode": "verify"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"spaces": [{"model": "x", "dim": 2}]})")),
                  ConfigError);
}

TEST_CASE("expansion of the all-suites bundle and validation errors") {
  RunConfig c;
  c.suites.push_back({"all", {}});
  c.trials = 1;
  RunConfig e = expand_and_validate(c);
  CHECK(e.suites.size() == known_suites().size());
  CHECK(e.spaces.size() == 8);  // diagonal dims 2..8 plus one hardy space

  RunConfig bad;
  bad.trials = 1;
  CHECK_THROWS_AS(expand_and_validate(bad), ConfigError);
  bad.suites.push_back({"no-such-suite", {}});
  SpaceSpec sp;
  bad.spaces.push_back(sp);
  CHECK_THROWS_AS(expand_and_validate(bad), ConfigError);
}

TEST_CASE("end-to-end run produces well-formed reports, JSON, and CSV") {
  RunConfig c;
  SpaceSpec sp;
  sp.model = ModelKind::Diagonal;
  sp.dim = 3;
  c.spaces.push_back(sp);
  c.suites.push_back({"young-scalar", {}});
  c.suites.push_back({"ki1", {}});
  c.trials = 5;
  c.master_seed = 7;
  auto reports = run_certify(c);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.trials == 5);
    CHECK(r.certificates.size() == 5);
    CHECK(r.violations.empty());
    CHECK(r.summary.min_gap >= 0.0);
  }
  json j = reports_to_json(reports, "2000-01-01T00:00:00Z");
  CHECK(j["meta"]["tool"] == "berlab");
  CHECK(j["suites"].size() == 2);
  CHECK(j["suites"][0]["suiteId"] == "young-scalar");
  CHECK(j["suites"][0]["summary"].contains("minRelGapSeed"));

  std::string csv = reports_to_csv(reports);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "suiteId,trial,theoremId,mode,lhs,rhs,gap,holds,witnessIndex,params");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 10);
}

TEST_CASE("identical runs serialize identically") {
  RunConfig c;
  SpaceSpec sp;
  sp.model = ModelKind::Diagonal;
  sp.dim = 4;
  c.spaces.push_back(sp);
  c.suites.push_back({"thm-half-rB", {}});
  c.trials = 3;
  c.master_seed = 99;
  auto r1 = run_certify(c);
  auto r2 = run_certify(c);
  CHECK(reports_to_json(r1, "t") == reports_to_json(r2, "t"));
  CHECK(reports_to_csv(r1) == reports_to_csv(r2));
}

TEST_CASE("function pair parsing") {
  auto fp = parse_function_pair(json::parse(R"({"kind": "power", "alpha": 0.25})"));
  CHECK(fp.is_power());
  CHECK(fp.alpha() == 0.25);
  auto tab = parse_function_pair(json::parse(
      R"({"kind": "custom", "samples": [[0, 0, 0], [1, 1, 1], [4, 2, 2]]})"));
  CHECK(!tab.is_power());
  CHECK(tab.f(4.0) == 2.0);
  CHECK_THROWS_AS(parse_function_pair(json::parse(R"({"kind": "spline"})")),
                  ConfigError);
}

TEST_CASE("custom space spec parses kernels") {
  json j = json::parse(R"({
    "model": "custom", "dim": 2,
    "kernels": [[[1, 0], [0, 0]], [[0, 0], [2, 0]]]
  })");
  SpaceSpec s = parse_space_spec(j);
  CHECK(s.model == ModelKind::CustomGram);
  REQUIRE(s.custom_kernels.cols() == 2);
  CHECK(s.custom_kernels(1, 1) == Complex(2, 0));
  auto space = build_space(s);
  CHECK(space.num_points() == 2);
}

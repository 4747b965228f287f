// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pauliphoton/sweep.hpp"

using namespace pauliphoton;

namespace {

std::string csv_of(const SweepSpec& spec) {
  std::ostringstream out;
  const auto rows = run_sweep(spec);
  write_csv(rows, out);
  return out.str();
}

}  // namespace

TEST_CASE("spec invariants are enforced") {
  SweepSpec spec;
  spec.widths = {2.0};

  SweepSpec bad = spec;
  bad.d_range.steps = 1;
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.d_range.start = -1.0;
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.widths = {2.0, -1.0};
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.hole_widths = {1.0, 2.0};  // length mismatch
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.jobs = 0;
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.widths = {};
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  bad = spec;
  bad.profile = "unknown";
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);

  CHECK_NOTHROW(validate_spec(spec));
}

TEST_CASE("rows are ordered by (width, d) with the documented values") {
  SweepSpec spec;
  spec.widths = {2.0, 4.0};
  spec.d_range = {0.0, 4.0, 3};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].width_e == 2.0);
  CHECK(rows[2].d == 4.0);
  CHECK(rows[3].width_e == 4.0);
  CHECK(rows[3].d == 0.0);

  CHECK(rows[0].concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1].d == 2.0);
  CHECK(rows[1].concurrence == doctest::Approx(0.28 / 1.1296).epsilon(1e-9));
  for (const auto& r : rows) {
    CHECK(r.ok);
    CHECK(r.family == "lorentzian");
    CHECK(r.width_h == r.width_e);
  }
}

TEST_CASE("csv header and formatting are stable") {
  SweepSpec spec;
  spec.widths = {2.0};
  spec.d_range = {0.0, 2.0, 2};
  const std::string csv = csv_of(spec);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "family,width_e,width_h,d,L,M,Ltilde,Mtilde,concurrence,negativity");

  std::string row0, row1;
  std::getline(lines, row0);
  std::getline(lines, row1);
  CHECK(row0 == "lorentzian,2,2,0,0.00633257398,0.00633257398,0.00633257398,"
                "0.00633257398,1,0.5");
  CHECK(row1.rfind("lorentzian,2,2,2,", 0) == 0);
  CHECK(row1.find("0.247875354") != std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(csv.find("\r") == std::string::npos);
}

TEST_CASE("identical specs give identical bytes regardless of jobs") {
  SweepSpec spec;
  spec.widths = {2.0, 4.0, 6.0};
  spec.d_range = {0.0, 10.0, 21};

  const std::string serial = csv_of(spec);
  spec.jobs = 4;
  const std::string parallel = csv_of(spec);
  CHECK(serial == parallel);

  spec.jobs = 1;
  CHECK(csv_of(spec) == serial);
}

TEST_CASE("lorentzian concurrence is scale invariant row by row") {
  SweepSpec narrow;
  narrow.widths = {2.0};
  narrow.d_range = {0.0, 5.0, 6};
  SweepSpec wide;
  wide.widths = {4.0};
  wide.d_range = {0.0, 10.0, 6};

  const auto a = run_sweep(narrow);
  const auto b = run_sweep(wide);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i].concurrence - b[i].concurrence) <= 1e-9);
  }
}

TEST_CASE("distinct hole widths flow into the tilde columns") {
  SweepSpec spec;
  spec.widths = {2.0};
  spec.hole_widths = {4.0};
  spec.d_range = {0.0, 2.0, 2};
  const auto rows = run_sweep(spec);
  CHECK(rows[0].width_h == 4.0);
  CHECK(rows[0].Ltilde == doctest::Approx(1.0 / (8 * 3.14159265358979 * 8 * 3.14159265358979))
                              .epsilon(1e-6));
  CHECK(rows[1].Ltilde != rows[1].L);
}

TEST_CASE("gaussian sweeps run through the same pipeline") {
  SweepSpec spec;
  spec.profile = "gaussian";
  spec.widths = {1.0};
  spec.d_range = {0.0, 2.0, 3};
  const auto rows = run_sweep(spec);
  CHECK(rows[0].concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].family == "gaussian");
  CHECK(rows[2].concurrence < rows[1].concurrence);
}

TEST_CASE("tabulated profile sweeps match the sampled family") {
  const std::string path = "sweep_table.dat";
  {
    std::ofstream out(path);
    const int n = 12001;
    for (int i = 0; i < n; ++i) {
      const double x = -300.0 + 600.0 * i / (n - 1);
      out << x << ' ' << 2.0 / (3.14159265358979324 * (x * x + 4.0)) << '\n';
    }
  }
  SweepSpec spec;
  spec.profile = "table:path=" + path;
  spec.d_range = {0.0, 2.0, 2};
  const auto rows = run_sweep(spec);
  std::remove(path.c_str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].family == "tabulated");
  CHECK(std::isnan(rows[0].width_e));
  CHECK(rows[0].concurrence == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rows[1].concurrence == doctest::Approx(0.28 / 1.1296).epsilon(1e-3));
}

TEST_CASE("oracle check passes on a converged grid") {
  OracleCheckParams params;
  params.width_e = params.width_h = 2.0;
  params.d = 2.0;
  params.grid_points = 201;
  params.grid_span = 40.0;
  const OracleCheckReport report = run_oracle_check(params);
  CHECK(report.pass);
  CHECK(report.max_rel_deviation <= 1e-3);
  CHECK(report.tolerance == 1e-3);
}

TEST_CASE("oracle check fails loudly on a 3-point grid") {
  OracleCheckParams params;
  params.d = 2.0;
  params.grid_points = 3;
  params.grid_span = 40.0;
  const OracleCheckReport report = run_oracle_check(params);
  CHECK(!report.pass);
  CHECK(report.max_rel_deviation > 1e-2);
}

TEST_CASE("oracle check refuses infeasible grids") {
  OracleCheckParams params;
  params.grid_points = 4001;
  CHECK_THROWS_AS(run_oracle_check(params), std::invalid_argument);
  params.grid_points = 2;
  CHECK_THROWS_AS(run_oracle_check(params), std::invalid_argument);
}

TEST_CASE("oracle check sizes its grid when none is given") {
  OracleCheckParams params;
  params.width_e = params.width_h = 0.5;
  params.d = 1.0;
  const OracleCheckReport report = run_oracle_check(params);
  CHECK(report.grid_points == 1001);
  CHECK(report.grid_span == doctest::Approx(10.5));
  CHECK(report.pass);
}

TEST_CASE("config files mirror the flags") {
  const std::string path = "sweep_config.txt";
  {
    std::ofstream out(path);
    out << "# curves\n";
    out << "profile=lorentzian\n";
    out << "widths=2,4\n";
    out << "d-range=0:4:5\n";
    out << "jobs=2\n";
    out << "output=out.csv\n";
  }
  SweepSpec spec;
  for (const auto& [k, v] : parse_config_file(path)) apply_config_entry(spec, k, v);
  std::remove(path.c_str());

  CHECK(spec.widths == std::vector<double>{2.0, 4.0});
  CHECK(spec.d_range.steps == 5);
  CHECK(spec.d_range.stop == 4.0);
  CHECK(spec.jobs == 2);
  CHECK(spec.output_path == "out.csv");

  // flags win: a later explicit assignment overrides the config value
  spec.widths = {6.0};
  CHECK(run_sweep(spec).size() == 5);

  CHECK_THROWS_AS(apply_config_entry(spec, "nope", "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_file("missing_config.txt"), std::invalid_argument);
}

TEST_CASE("width list and d-range parsing") {
  CHECK(parse_width_list("2,4,6") == std::vector<double>{2.0, 4.0, 6.0});
  CHECK(parse_width_list("0.5") == std::vector<double>{0.5});
  CHECK_THROWS_AS(parse_width_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_width_list("2,x"), std::invalid_argument);

  const DRange r = parse_d_range("0:10:101");
  CHECK(r.start == 0.0);
  CHECK(r.stop == 10.0);
  CHECK(r.steps == 101);
  CHECK_THROWS_AS(parse_d_range("0:10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_d_range("a:b:c"), std::invalid_argument);
}

TEST_CASE("config syntax errors are reported with their line") {
  const std::string path = "bad_config.txt";
  {
    std::ofstream out(path);
    out << "widths 2,4\n";
  }
  try {
    parse_config_file(path);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(":1") != std::string::npos);
  }
  std::remove(path.c_str());
}

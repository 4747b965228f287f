// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: parameter sweeps over (width, d) with CSV output,
// the brute-force oracle cross-check, and state dumps.
//
// Exit codes: 0 success, 2 usage or spec error, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pauliphoton/entanglement.hpp"
#include "pauliphoton/photon_state.hpp"
#include "pauliphoton/sweep.hpp"

namespace {

using namespace pauliphoton;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SweepFlags {
  std::string profile;
  std::string widths;
  std::string hole_widths;
  std::string d_range;
  std::string output;
  std::string config;
  int jobs = 0;
};

SweepSpec build_sweep_spec(const CLI::App& cmd, const SweepFlags& flags) {
  SweepSpec spec;
  if (!flags.config.empty()) {
    for (const auto& [key, value] : parse_config_file(flags.config)) {
      apply_config_entry(spec, key, value);
    }
  }
  // explicit flags win over config entries
  if (cmd.count("--profile") > 0) spec.profile = flags.profile;
  if (cmd.count("--widths") > 0) spec.widths = parse_width_list(flags.widths);
  if (cmd.count("--hole-widths") > 0) {
    spec.hole_widths = parse_width_list(flags.hole_widths);
  }
  if (cmd.count("--d-range") > 0) spec.d_range = parse_d_range(flags.d_range);
  if (cmd.count("--jobs") > 0) spec.jobs = flags.jobs;
  if (cmd.count("--output") > 0) spec.output_path = flags.output;
  return spec;
}

int run_sweep_command(const CLI::App& cmd, const SweepFlags& flags) {
  const SweepSpec spec = build_sweep_spec(cmd, flags);
  const std::vector<SweepRow> rows = run_sweep(spec);

  if (spec.output_path.empty()) {
    write_csv(rows, std::cout);
  } else {
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file " << spec.output_path << "\n";
      return kExitUsage;
    }
    write_csv(rows, out);
  }

  int flagged = 0;
  for (const SweepRow& r : rows) {
    if (!r.ok) {
      ++flagged;
      std::cerr << "warning: row (width_e=" << r.width_e << ", d=" << r.d
                << ") flagged: " << r.note << "\n";
    }
  }
  if (flagged > 0) {
    std::cerr << flagged << " row(s) hit numerical failures\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run_oracle_check_command(const OracleCheckParams& params) {
  const OracleCheckReport report = run_oracle_check(params);
  std::printf("grid_points = %d\n", report.grid_points);
  std::printf("grid_span = %.9g\n", report.grid_span);
  std::printf("max_relative_deviation = %.6g\n", report.max_rel_deviation);
  std::printf("tolerance = %.6g\n", report.tolerance);
  std::printf("%s\n", report.pass ? "PASS" : "FAIL");
  return report.pass ? kExitOk : kExitNumerical;
}

int run_dump_state_command(const std::string& profile, double width,
                           std::optional<double> hole_width, double d) {
  const ProfileSpec ps = parse_profile_spec(profile);
  MomentumProfile e1, e2, h1, h2;
  if (ps.family == ProfileFamily::tabulated) {
    auto table = std::make_shared<ProfileTable>(load_profile_table(ps.table_path));
    e1 = tabulated_profile(table, -0.5 * d);
    e2 = tabulated_profile(table, +0.5 * d);
    h1 = mirrored_hole_profile(e1);
    h2 = mirrored_hole_profile(e2);
  } else {
    const double wh = hole_width.value_or(width);
    e1 = make_profile(ps, width, -0.5 * d);
    e2 = make_profile(ps, width, +0.5 * d);
    h1 = make_profile(ps, wh, +0.5 * d);
    h2 = make_profile(ps, wh, -0.5 * d);
  }
  const OverlapQuad q = overlap_quad(e1, e2, h1, h2);
  const TwoQubitDM spin = normalize(assemble_density_matrix(q));
  const TwoQubitDM photon =
      map_to_polarization(spin, SelectionRuleTable::heavy_hole_default());

  char head[256];
  std::snprintf(head, sizeof head,
                "{\"d\":%.17g,\"L\":%.17g,\"M\":%.17g,\"Ltilde\":%.17g,"
                "\"Mtilde\":%.17g,",
                d, q.L, q.M, q.Ltilde, q.Mtilde);
  std::cout << head << "\"spin_basis\":" << to_json(spin)
            << ",\"photon_basis\":" << to_json(photon) << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarization-entangled photon pair statistics from "
               "momentum-broadened fermion pairs"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "concurrence and negativity over a (width, d) grid, as CSV");
  sweep_cmd->add_option("--profile", sweep_flags.profile,
                        "profile family or spec (lorentzian, gaussian:sigma=1, "
                        "table:path=FILE)");
  sweep_cmd->add_option("--widths", sweep_flags.widths, "comma list, e.g. 2,4,6");
  sweep_cmd->add_option("--hole-widths", sweep_flags.hole_widths,
                        "hole widths, entry for entry with --widths");
  sweep_cmd->add_option("--d-range", sweep_flags.d_range, "start:stop:steps");
  sweep_cmd->add_option("--output", sweep_flags.output, "CSV path (default stdout)");
  sweep_cmd->add_option("--jobs", sweep_flags.jobs, "worker pool size");
  sweep_cmd->add_option("--config", sweep_flags.config,
                        "key=value file mirroring the flags; flags win");

  OracleCheckParams oracle_params;
  bool oracle_hole_width_set = false;
  double oracle_hole_width = 0.0;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "compare the closed-form state against the brute-force grid oracle");
  oracle_cmd->add_option("--profile", oracle_params.profile, "lorentzian or gaussian");
  oracle_cmd->add_option("--width", oracle_params.width_e, "electron width");
  oracle_cmd->add_option("--hole-width", oracle_hole_width, "hole width (default --width)")
      ->each([&](const std::string&) { oracle_hole_width_set = true; });
  oracle_cmd->add_option("--d", oracle_params.d, "center distance |k - k'|");
  oracle_cmd->add_option("--grid-points", oracle_params.grid_points,
                         "grid size, <= 2001 (default: >= 1001, odd)");
  oracle_cmd->add_option("--grid-span", oracle_params.grid_span,
                         "grid covers +-span (default: d/2 + 20 max width)");

  std::string dump_profile = "lorentzian";
  double dump_width = 2.0;
  std::optional<double> dump_hole_width;
  double dump_hole_width_value = 0.0;
  bool dump_hole_width_set = false;
  double dump_d = 0.0;
  CLI::App* dump_cmd = app.add_subcommand(
      "dump-state", "emit the spin- and photon-basis density matrices as JSON");
  dump_cmd->add_option("--profile", dump_profile, "profile family or spec");
  dump_cmd->add_option("--width", dump_width, "electron width");
  dump_cmd->add_option("--hole-width", dump_hole_width_value, "hole width (default --width)")
      ->each([&](const std::string&) { dump_hole_width_set = true; });
  dump_cmd->add_option("--d", dump_d, "center distance |k - k'|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep_command(*sweep_cmd, sweep_flags);
    if (oracle_cmd->parsed()) {
      if (!oracle_hole_width_set) oracle_params.width_h = oracle_params.width_e;
      else oracle_params.width_h = oracle_hole_width;
      return run_oracle_check_command(oracle_params);
    }
    if (dump_cmd->parsed()) {
      if (dump_hole_width_set) dump_hole_width = dump_hole_width_value;
      return run_dump_state_command(dump_profile, dump_width, dump_hole_width, dump_d);
    }
  } catch (const QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

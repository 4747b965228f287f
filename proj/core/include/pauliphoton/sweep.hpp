// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pauliphoton/overlaps.hpp"

namespace pauliphoton {

/// Inclusive linspace: steps values from start to stop.
struct DRange {
  double start = 0.0;
  double stop = 10.0;
  int steps = 101;
};

struct SweepSpec {
  std::string profile = "lorentzian";   ///< profile grammar, see profiles.hpp
  std::vector<double> widths;           ///< electron widths, one curve each
  std::vector<double> hole_widths;      ///< empty: same as widths
  DRange d_range{};
  int jobs = 1;                         ///< worker pool size
  std::string output_path;              ///< empty: stdout
};

struct SweepRow {
  std::string family;
  double width_e = 0, width_h = 0, d = 0;
  double L = 0, M = 0, Ltilde = 0, Mtilde = 0;
  double concurrence = 0, negativity = 0;
  bool ok = true;
  std::string note;  ///< failure description for flagged rows
};

/// Throws std::invalid_argument when the spec violates its invariants
/// (steps >= 2, start >= 0, widths > 0, ...).
void validate_spec(const SweepSpec& spec);

/// One row per (width, d), ordered by (width index, d index) regardless of
/// how the worker pool schedules them. Quadrature failures flag the row
/// (ok = false, numeric fields nan) instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with the fixed header
/// family,width_e,width_h,d,L,M,Ltilde,Mtilde,concurrence,negativity
/// and 9 significant digits; identical specs produce identical bytes.
void write_csv(std::span<const SweepRow> rows, std::ostream& out);
const char* csv_header();

struct OracleCheckParams {
  std::string profile = "lorentzian";
  double width_e = 2.0;
  double width_h = 2.0;
  double d = 0.0;
  int grid_points = 0;     ///< 0: at least 1001 points (odd)
  double grid_span = 0.0;  ///< 0: d/2 + 20 max(width)
  double tolerance = 1e-3;
};

struct OracleCheckReport {
  double max_rel_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int grid_points = 0;      ///< resolved grid size
  double grid_span = 0.0;   ///< resolved half span
  Eigen::Matrix4cd analytic;  ///< normalized closed-form matrix
  Eigen::Matrix4cd oracle;    ///< normalized brute-force matrix
};

/// Compares the trace-normalized analytic matrix against the discretized
/// Fock oracle entrywise. Refuses grids above 2001 points (the documented
/// feasibility bound) with std::invalid_argument.
OracleCheckReport run_oracle_check(const OracleCheckParams& params);

/// key=value lines; '#' starts a comment. Unknown keys are the caller's
/// problem (apply_config_entry throws).
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies one config entry to the spec. Keys mirror the CLI flags:
/// profile, widths, hole-widths, d-range, jobs, output.
void apply_config_entry(SweepSpec& spec, const std::string& key,
                        const std::string& value);

std::vector<double> parse_width_list(const std::string& text);
DRange parse_d_range(const std::string& text);  ///< "start:stop:steps"

}  // namespace pauliphoton

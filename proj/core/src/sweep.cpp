// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pauliphoton/entanglement.hpp"
#include "pauliphoton/fock_oracle.hpp"
#include "pauliphoton/photon_state.hpp"

namespace pauliphoton {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double d_value(const DRange& r, int i) {
  if (r.steps == 1) return r.start;
  return r.start + i * (r.stop - r.start) / (r.steps - 1);
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
  const ProfileSpec ps = parse_profile_spec(spec.profile);
  const bool tabulated = ps.family == ProfileFamily::tabulated;
  if (!tabulated && spec.widths.empty()) {
    throw std::invalid_argument("sweep needs at least one width");
  }
  if (tabulated && !spec.widths.empty()) {
    throw std::invalid_argument("tabulated profiles take no widths");
  }
  for (double w : spec.widths) {
    if (!(w > 0.0)) throw std::invalid_argument("widths must be > 0");
  }
  for (double w : spec.hole_widths) {
    if (!(w > 0.0)) throw std::invalid_argument("hole widths must be > 0");
  }
  if (!spec.hole_widths.empty() && spec.hole_widths.size() != spec.widths.size()) {
    throw std::invalid_argument("hole-widths must match widths entry for entry");
  }
  if (spec.d_range.steps < 2) throw std::invalid_argument("d-range needs steps >= 2");
  if (!(spec.d_range.start >= 0.0)) throw std::invalid_argument("d-range start must be >= 0");
  if (!(spec.d_range.stop >= spec.d_range.start)) {
    throw std::invalid_argument("d-range stop must be >= start");
  }
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  const ProfileSpec ps = parse_profile_spec(spec.profile);
  const bool tabulated = ps.family == ProfileFamily::tabulated;

  // the table is loaded once and shared; widths are ignored for tables
  std::shared_ptr<const ProfileTable> table;
  if (tabulated) {
    table = std::make_shared<ProfileTable>(load_profile_table(ps.table_path));
  }

  const std::size_t n_widths = tabulated ? 1 : spec.widths.size();
  const std::size_t n_rows = n_widths * static_cast<std::size_t>(spec.d_range.steps);
  std::vector<SweepRow> rows(n_rows);

  auto compute_row = [&](std::size_t index) {
    const std::size_t wi = index / spec.d_range.steps;
    const int di = static_cast<int>(index % spec.d_range.steps);
    const double d = d_value(spec.d_range, di);

    SweepRow row;
    row.family = family_name(ps.family);
    row.d = d;
    row.width_e = tabulated ? kNan : spec.widths[wi];
    row.width_h = tabulated ? kNan
                  : (spec.hole_widths.empty() ? spec.widths[wi]
                                              : spec.hole_widths[wi]);
    try {
      MomentumProfile e1, e2, h1, h2;
      if (tabulated) {
        e1 = tabulated_profile(table, -0.5 * d);
        e2 = tabulated_profile(table, +0.5 * d);
        h1 = mirrored_hole_profile(e1);
        h2 = mirrored_hole_profile(e2);
      } else {
        e1 = make_profile(ps, row.width_e, -0.5 * d);
        e2 = make_profile(ps, row.width_e, +0.5 * d);
        h1 = make_profile(ps, row.width_h, +0.5 * d);
        h2 = make_profile(ps, row.width_h, -0.5 * d);
      }
      const OverlapQuad q = overlap_quad(e1, e2, h1, h2);
      const EntanglementReport report = analyze(q);
      row.L = q.L;
      row.M = q.M;
      row.Ltilde = q.Ltilde;
      row.Mtilde = q.Mtilde;
      row.concurrence = report.concurrence;
      row.negativity = report.negativity;
    } catch (const QuadratureError& e) {
      row.ok = false;
      row.note = e.what();
      row.L = row.M = row.Ltilde = row.Mtilde = kNan;
      row.concurrence = row.negativity = kNan;
    }
    rows[index] = std::move(row);
  };

  const int jobs = std::min<int>(spec.jobs, static_cast<int>(n_rows));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n_rows; ++i) compute_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n_rows || failed.load()) break;
        try {
          compute_row(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          break;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return rows;
}

const char* csv_header() {
  return "family,width_e,width_h,d,L,M,Ltilde,Mtilde,concurrence,negativity";
}

void write_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const SweepRow& r : rows) {
    out << r.family << ',' << format_g9(r.width_e) << ',' << format_g9(r.width_h)
        << ',' << format_g9(r.d) << ',' << format_g9(r.L) << ',' << format_g9(r.M)
        << ',' << format_g9(r.Ltilde) << ',' << format_g9(r.Mtilde) << ','
        << format_g9(r.concurrence) << ',' << format_g9(r.negativity) << '\n';
  }
}

OracleCheckReport run_oracle_check(const OracleCheckParams& params) {
  const MomentumGrid auto_grid = default_oracle_grid(
      std::max(params.width_e, params.width_h), params.d);
  const int grid_points =
      params.grid_points == 0 ? auto_grid.size() : params.grid_points;
  const double grid_span = params.grid_span == 0.0
                               ? auto_grid.points.back()
                               : params.grid_span;
  if (grid_points > 2001) {
    throw std::invalid_argument(
        "refusing a grid of " + std::to_string(grid_points) +
        " points: the brute-force oracle builds O(points^2) states and is "
        "documented feasible up to 2001 points");
  }
  if (grid_points < 3) {
    throw std::invalid_argument("oracle check needs at least 3 grid points");
  }
  if (!(grid_span > 0.0)) {
    throw std::invalid_argument("grid span must be > 0");
  }
  const ProfileSpec ps = parse_profile_spec(params.profile);
  if (ps.family == ProfileFamily::tabulated) {
    throw std::invalid_argument("oracle check supports analytic profiles only");
  }
  const double d = params.d;
  const MomentumProfile e1 = make_profile(ps, params.width_e, -0.5 * d);
  const MomentumProfile e2 = make_profile(ps, params.width_e, +0.5 * d);
  const MomentumProfile h1 = make_profile(ps, params.width_h, +0.5 * d);
  const MomentumProfile h2 = make_profile(ps, params.width_h, -0.5 * d);

  const OverlapQuad q = overlap_quad(e1, e2, h1, h2);
  const TwoQubitDM analytic = normalize(assemble_density_matrix(q));

  OracleSetup setup{e1, e2, h1, h2,
                    MomentumGrid::symmetric(grid_span, grid_points)};
  Eigen::Matrix4cd oracle = oracle_density_matrix(setup);
  const double trace = oracle.trace().real();
  if (!(trace > 0.0)) {
    throw std::domain_error("oracle matrix has non-positive trace");
  }
  oracle /= trace;

  OracleCheckReport report;
  report.tolerance = params.tolerance;
  report.grid_points = grid_points;
  report.grid_span = grid_span;
  report.analytic = analytic.entries;
  report.oracle = oracle;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double a = std::abs(analytic.entries(i, j));
      const double dev = std::abs(oracle(i, j) - analytic.entries(i, j)) /
                         std::max(a, 1e-12);
      report.max_rel_deviation = std::max(report.max_rel_deviation, dev);
    }
  }
  report.pass = report.max_rel_deviation <= params.tolerance;
  return report;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    }
    entries[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return entries;
}

void apply_config_entry(SweepSpec& spec, const std::string& key,
                        const std::string& value) {
  if (key == "profile") {
    spec.profile = value;
  } else if (key == "widths") {
    spec.widths = parse_width_list(value);
  } else if (key == "hole-widths") {
    spec.hole_widths = parse_width_list(value);
  } else if (key == "d-range") {
    spec.d_range = parse_d_range(value);
  } else if (key == "jobs") {
    spec.jobs = std::stoi(value);
  } else if (key == "output") {
    spec.output_path = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

std::vector<double> parse_width_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad width entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty width list");
  return out;
}

DRange parse_d_range(const std::string& text) {
  DRange r;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw std::invalid_argument("d-range must be start:stop:steps");
  }
  try {
    r.start = std::stod(text.substr(0, c1));
    r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.steps = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("d-range must be start:stop:steps, got '" + text + "'");
  }
  return r;
}

}  // namespace pauliphoton

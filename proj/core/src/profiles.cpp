// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pauliphoton {

namespace {

void check_width(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("profile width must be finite and > 0");
  }
}

void check_table(const ProfileTable& t) {
  if (t.x.size() != t.f.size()) {
    throw std::invalid_argument("profile table: x and f lengths differ");
  }
  if (t.x.size() < 2) {
    throw std::invalid_argument("profile table needs at least two samples");
  }
  for (std::size_t i = 1; i < t.x.size(); ++i) {
    if (!(t.x[i] > t.x[i - 1])) {
      throw std::invalid_argument("profile table abscissae must be strictly increasing");
    }
  }
}

double table_eval(const ProfileTable& t, double u) {
  if (u < t.x.front() || u > t.x.back()) {
    throw std::out_of_range("tabulated profile queried outside its sampled range");
  }
  auto it = std::upper_bound(t.x.begin(), t.x.end(), u);
  if (it == t.x.end()) return t.f.back();
  const std::size_t hi = static_cast<std::size_t>(it - t.x.begin());
  const std::size_t lo = hi - 1;
  const double w = (u - t.x[lo]) / (t.x[hi] - t.x[lo]);
  return t.f[lo] + w * (t.f[hi] - t.f[lo]);
}

}  // namespace

MomentumProfile lorentzian_profile(double delta, double center) {
  check_width(delta);
  return {ProfileFamily::lorentzian, delta, center, nullptr};
}

MomentumProfile gaussian_profile(double sigma, double center) {
  check_width(sigma);
  return {ProfileFamily::gaussian, sigma, center, nullptr};
}

MomentumProfile tabulated_profile(std::shared_ptr<const ProfileTable> table,
                                  double center) {
  if (!table) throw std::invalid_argument("tabulated profile: null table");
  check_table(*table);
  return {ProfileFamily::tabulated, 0.0, center, std::move(table)};
}

double profile_eval(const MomentumProfile& p, double x) {
  const double u = x - p.center;
  switch (p.family) {
    case ProfileFamily::lorentzian:
      return p.width / (std::numbers::pi * (u * u + p.width * p.width));
    case ProfileFamily::gaussian: {
      const double z = u / p.width;
      return std::exp(-0.5 * z * z) /
             (p.width * std::sqrt(2.0 * std::numbers::pi));
    }
    case ProfileFamily::tabulated:
      return table_eval(*p.table, u);
  }
  throw std::logic_error("unreachable profile family");
}

std::pair<double, double> profile_support(const MomentumProfile& p) {
  if (p.family == ProfileFamily::tabulated) {
    return {p.table->x.front() + p.center, p.table->x.back() + p.center};
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf};
}

const char* family_name(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::lorentzian: return "lorentzian";
    case ProfileFamily::gaussian: return "gaussian";
    case ProfileFamily::tabulated: return "tabulated";
  }
  return "?";
}

ProfileTable load_profile_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile table: " + path);
  ProfileTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x, f;
    if (row >> x >> f) {
      t.x.push_back(x);
      t.f.push_back(f);
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected two numeric columns");
    }
  }
  check_table(t);
  return t;
}

ProfileSpec parse_profile_spec(const std::string& spec) {
  ProfileSpec out;
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto parse_kv = [&](const std::string& key) -> std::string {
    const std::string prefix = key + "=";
    if (rest.rfind(prefix, 0) != 0) {
      throw std::invalid_argument("profile spec '" + spec + "': expected " + prefix + "...");
    }
    return rest.substr(prefix.size());
  };

  if (head == "lorentzian") {
    out.family = ProfileFamily::lorentzian;
    if (!rest.empty()) out.width = std::stod(parse_kv("delta"));
  } else if (head == "gaussian") {
    out.family = ProfileFamily::gaussian;
    if (!rest.empty()) out.width = std::stod(parse_kv("sigma"));
  } else if (head == "table") {
    out.family = ProfileFamily::tabulated;
    out.table_path = parse_kv("path");
    if (out.table_path.empty()) {
      throw std::invalid_argument("profile spec '" + spec + "': empty table path");
    }
  } else {
    throw std::invalid_argument("unknown profile family '" + head + "'");
  }
  return out;
}

MomentumProfile make_profile(const ProfileSpec& spec,
                             std::optional<double> width_override,
                             double center) {
  if (spec.family == ProfileFamily::tabulated) {
    auto table = std::make_shared<ProfileTable>(load_profile_table(spec.table_path));
    return tabulated_profile(std::move(table), center);
  }
  const std::optional<double> width = width_override ? width_override : spec.width;
  if (!width) {
    throw std::invalid_argument("profile spec needs a width (inline or override)");
  }
  return spec.family == ProfileFamily::lorentzian
             ? lorentzian_profile(*width, center)
             : gaussian_profile(*width, center);
}

}  // namespace pauliphoton

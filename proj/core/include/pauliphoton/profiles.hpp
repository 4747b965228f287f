// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pauliphoton {

enum class ProfileFamily { lorentzian, gaussian, tabulated };

/// Sampled distribution values on a strictly increasing abscissa grid.
/// Evaluation between samples is linear; outside the grid it is an error.
struct ProfileTable {
  std::vector<double> x;
  std::vector<double> f;
};

/// Unit-mass momentum distribution f(. - center).
///
/// The lorentzian family is f(x) = w / (pi (x^2 + w^2)) with w = width,
/// the gaussian family f(x) = exp(-x^2 / 2 w^2) / (w sqrt(2 pi)); both
/// integrate to one over the real line.
struct MomentumProfile {
  ProfileFamily family = ProfileFamily::lorentzian;
  double width = 1.0;   ///< delta (lorentzian) or sigma (gaussian)
  double center = 0.0;  ///< k
  std::shared_ptr<const ProfileTable> table;  ///< tabulated family only
};

MomentumProfile lorentzian_profile(double delta, double center = 0.0);
MomentumProfile gaussian_profile(double sigma, double center = 0.0);
MomentumProfile tabulated_profile(std::shared_ptr<const ProfileTable> table,
                                  double center = 0.0);

/// f(x - center). Throws std::out_of_range for a tabulated profile queried
/// outside its sampled range.
double profile_eval(const MomentumProfile& p, double x);

/// Interval outside of which the profile vanishes (tabulated) or the
/// whole line (analytic families).
std::pair<double, double> profile_support(const MomentumProfile& p);

const char* family_name(ProfileFamily family);

/// Two-column text (x, f) with strictly increasing x; '#' starts a comment.
ProfileTable load_profile_table(const std::string& path);

/// Parsed form of the profile grammar shared with the CLI:
///   lorentzian            lorentzian:delta=2
///   gaussian              gaussian:sigma=1
///   table:path=<file>
struct ProfileSpec {
  ProfileFamily family = ProfileFamily::lorentzian;
  std::optional<double> width;  ///< present when given inline
  std::string table_path;       ///< tabulated only
};

ProfileSpec parse_profile_spec(const std::string& spec);

/// Instantiate a parsed spec. width_override (e.g. a CLI --widths entry)
/// wins over an inline width; analytic families require one of the two.
MomentumProfile make_profile(const ProfileSpec& spec,
                             std::optional<double> width_override,
                             double center);

}  // namespace pauliphoton

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace pauliphoton {

/// Thrown when adaptive refinement stalls above the requested tolerance.
/// Carries the final error estimate so callers can report how far off it was.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : std::runtime_error(what), error_estimate(estimate) {}

  double error_estimate;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;  ///< subintervals in the final partition
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_intervals = 4000;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over the finite
/// interval [a, b]. Worst subinterval is bisected first.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

/// Integral of f over the whole real line. Uses the rational substitution
/// x = t / (1 - t^2), which maps (-1, 1) onto the line; integrands that decay
/// at least as fast as x^-2 stay bounded after the transform, so heavy
/// (Lorentzian-type) tails need no hand-picked truncation point.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     const QuadratureOptions& opts = {});

}  // namespace pauliphoton

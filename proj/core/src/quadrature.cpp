// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

// Adaptive Gauss-Kronrod quadrature. The 7/15-point rule pair and the
// (resasc-scaled) error heuristic follow the classic QUADPACK dqk15;
// the driver keeps a priority queue of subintervals and bisects the one
// with the largest error estimate until the global estimate is within
// tolerance.

#include "pauliphoton/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace pauliphoton {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights;
// every second abscissa is a node of the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    return x.error < y.error;
  }
};

Interval gauss_kronrod_15(const std::function<double(double)>& f, double a,
                          double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double result_abs = std::abs(result_kronrod);

  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double abscissa = half * kXgk[j];
    const double f1 = f(center - abscissa);
    const double f2 = f(center + abscissa);
    fv1[j] = f1;
    fv2[j] = f2;
    result_kronrod += kWgk[j] * (f1 + f2);
    result_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }

  const double mean = result_kronrod * 0.5;
  double result_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  const double value = result_kronrod * half;
  result_abs *= std::abs(half);
  result_asc *= std::abs(half);

  double err = std::abs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (result_abs > uflow / (50.0 * eps)) {
    err = std::max(eps * 50.0 * result_abs, err);
  }
  return Interval{a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0};
    throw std::invalid_argument("integrate: requires a <= b");
  }

  std::priority_queue<Interval, std::vector<Interval>, ByError> queue;
  queue.push(gauss_kronrod_15(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int intervals = 1;

  auto tolerance = [&](double value) {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  };

  while (total_error > tolerance(total_value)) {
    if (intervals >= opts.max_intervals) {
      throw QuadratureError(
          "adaptive quadrature did not converge: error estimate " +
              std::to_string(total_error) + " above tolerance " +
              std::to_string(tolerance(total_value)) + " after " +
              std::to_string(intervals) + " intervals",
          total_error);
    }
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // worst interval collapsed to machine precision and still dominates
      throw QuadratureError(
          "adaptive quadrature stalled on an interval of machine width",
          total_error);
    }
    Interval left = gauss_kronrod_15(f, worst.a, mid);
    Interval right = gauss_kronrod_15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  return {total_value, total_error, intervals};
}

QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     const QuadratureOptions& opts) {
  // x = t / (1 - t^2), dx = (1 + t^2) / (1 - t^2)^2 dt, t in (-1, 1)
  auto transformed = [&f](double t) {
    const double one_minus = 1.0 - t * t;
    if (one_minus <= 0.0) return 0.0;
    const double x = t / one_minus;
    const double jacobian = (1.0 + t * t) / (one_minus * one_minus);
    const double fx = f(x);
    const double g = fx * jacobian;
    return std::isfinite(g) ? g : 0.0;
  };
  return integrate(transformed, -1.0, 1.0, opts);
}

}  // namespace pauliphoton

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/overlaps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pauliphoton {

namespace {

constexpr double kPi = std::numbers::pi;

bool analytic(const MomentumProfile& p) {
  return p.family != ProfileFamily::tabulated;
}

/// Integrand evaluation that treats out-of-support points as zero, so the
/// quadrature never trips the tabulated range check at interval edges.
double eval_or_zero(const MomentumProfile& p, double x) {
  const auto [lo, hi] = profile_support(p);
  if (x < lo || x > hi) return 0.0;
  return profile_eval(p, x);
}

double product_integral(const MomentumProfile& a, const MomentumProfile& b,
                        const QuadratureOptions& opts) {
  const auto [alo, ahi] = profile_support(a);
  const auto [blo, bhi] = profile_support(b);
  const double lo = std::max(alo, blo);
  const double hi = std::min(ahi, bhi);
  if (!(lo < hi)) return 0.0;  // disjoint supports

  auto integrand = [&](double x) { return eval_or_zero(a, x) * eval_or_zero(b, x); };
  if (std::isinf(lo) && std::isinf(hi)) {
    return integrate_real_line(integrand, opts).value;
  }
  return integrate(integrand, lo, hi, opts).value;
}

}  // namespace

void validate_overlap_quad(const OverlapQuad& q, double rel_slack) {
  auto ok_pair = [rel_slack](double L, double M) {
    return L >= 0.0 && M >= -rel_slack * L && M <= L * (1.0 + rel_slack);
  };
  if (!ok_pair(q.L, q.M) || !ok_pair(q.Ltilde, q.Mtilde)) {
    throw std::domain_error("overlap quad violates 0 <= M <= L");
  }
}

double self_overlap(const MomentumProfile& p) {
  switch (p.family) {
    case ProfileFamily::lorentzian:
      return 1.0 / (2.0 * kPi * p.width);
    case ProfileFamily::gaussian:
      return 1.0 / (2.0 * p.width * std::sqrt(kPi));
    case ProfileFamily::tabulated:
      return self_overlap_quadrature(p);
  }
  throw std::logic_error("unreachable profile family");
}

double cross_overlap(const MomentumProfile& a, const MomentumProfile& b) {
  if (a.family == ProfileFamily::lorentzian &&
      b.family == ProfileFamily::lorentzian) {
    // correlation of two lorentzians is a lorentzian of summed width
    const double w = a.width + b.width;
    const double d = a.center - b.center;
    return w / (kPi * (d * d + w * w));
  }
  if (a.family == ProfileFamily::gaussian &&
      b.family == ProfileFamily::gaussian) {
    const double v = a.width * a.width + b.width * b.width;
    const double d = a.center - b.center;
    return std::exp(-0.5 * d * d / v) / std::sqrt(2.0 * kPi * v);
  }
  return cross_overlap_quadrature(a, b);
}

double self_overlap_quadrature(const MomentumProfile& p,
                               const QuadratureOptions& opts) {
  return product_integral(p, p, opts);
}

double cross_overlap_quadrature(const MomentumProfile& a,
                                const MomentumProfile& b,
                                const QuadratureOptions& opts) {
  return product_integral(a, b, opts);
}

double compute_L(const MomentumProfile& p1, const MomentumProfile& p2) {
  return self_overlap(p1) * self_overlap(p2);
}

double compute_M(const MomentumProfile& p1, const MomentumProfile& p2) {
  // real profiles: the two cross factors coincide, M = g^2
  const double g12 = cross_overlap(p1, p2);
  const double g21 = (analytic(p1) && analytic(p2) &&
                      p1.family == p2.family)
                         ? g12
                         : cross_overlap(p2, p1);
  return g12 * g21;
}

MomentumProfile mirrored_hole_profile(const MomentumProfile& electron) {
  MomentumProfile hole = electron;
  hole.center = -electron.center;
  return hole;
}

OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp,
                         const MomentumProfile& hole_kt,
                         const MomentumProfile& hole_ktp) {
  OverlapQuad q;
  q.L = compute_L(electron_k, electron_kp);
  q.M = compute_M(electron_k, electron_kp);
  q.Ltilde = compute_L(hole_kt, hole_ktp);
  q.Mtilde = compute_M(hole_kt, hole_ktp);
  validate_overlap_quad(q, 1e-9);
  return q;
}

OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp) {
  return overlap_quad(electron_k, electron_kp,
                      mirrored_hole_profile(electron_k),
                      mirrored_hole_profile(electron_kp));
}

OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp,
                         double hole_width) {
  if (!analytic(electron_k) || !analytic(electron_kp)) {
    throw std::invalid_argument(
        "hole width override needs analytic electron profiles; "
        "pass explicit hole profiles instead");
  }
  MomentumProfile hk = mirrored_hole_profile(electron_k);
  MomentumProfile hkp = mirrored_hole_profile(electron_kp);
  hk.width = hole_width;
  hkp.width = hole_width;
  if (!(hole_width > 0.0)) throw std::invalid_argument("hole width must be > 0");
  return overlap_quad(electron_k, electron_kp, hk, hkp);
}

OverlapQuad lorentzian_quad(double delta_e, double delta_h, double d) {
  return overlap_quad(lorentzian_profile(delta_e, -0.5 * d),
                      lorentzian_profile(delta_e, +0.5 * d),
                      lorentzian_profile(delta_h, +0.5 * d),
                      lorentzian_profile(delta_h, -0.5 * d));
}

}  // namespace pauliphoton

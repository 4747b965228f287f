// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pauliphoton/profiles.hpp"
#include "pauliphoton/quadrature.hpp"

namespace pauliphoton {

/// The four overlap scalars feeding the two-pair density matrix:
/// L, M for the electron pair and Ltilde, Mtilde for the hole pair.
/// L carries the total weight of the two distributions, M the exchange
/// overlap; M/L measures how indistinguishable the two fermions are
/// in momentum.
struct OverlapQuad {
  double L = 0.0;
  double M = 0.0;
  double Ltilde = 0.0;
  double Mtilde = 0.0;
};

/// Throws std::domain_error unless 0 <= M <= L and 0 <= Mtilde <= Ltilde
/// (up to a relative slack for roundoff).
void validate_overlap_quad(const OverlapQuad& q, double rel_slack = 1e-12);

/// integral of f(x)^2 over x. Closed form for the analytic families,
/// adaptive quadrature otherwise.
double self_overlap(const MomentumProfile& p);

/// integral of f_a(x) f_b(x) over x, centers included. Closed form when both
/// profiles share an analytic family, adaptive quadrature otherwise.
double cross_overlap(const MomentumProfile& a, const MomentumProfile& b);

/// Quadrature-only evaluations of the same integrals (cross-check path).
double self_overlap_quadrature(const MomentumProfile& p,
                               const QuadratureOptions& opts = {});
double cross_overlap_quadrature(const MomentumProfile& a,
                                const MomentumProfile& b,
                                const QuadratureOptions& opts = {});

/// L(p1, p2) = (integral of |f1|^2)(integral of |f2|^2); depends on the
/// centers only through nothing at all -- it is translation invariant.
double compute_L(const MomentumProfile& p1, const MomentumProfile& p2);

/// M(p1, p2) = (integral of f1 f2)^2 for real profiles; depends on the
/// centers only through their distance d. M = L exactly when the centers
/// coincide and never exceeds L (Cauchy-Schwarz).
double compute_M(const MomentumProfile& p1, const MomentumProfile& p2);

/// Profile for the partner hole: same shape, center negated.
MomentumProfile mirrored_hole_profile(const MomentumProfile& electron);

/// Bundle L, M for the electron pair (profiles at k, k') and Ltilde, Mtilde
/// for the hole pair (profiles at kt, kt').
OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp,
                         const MomentumProfile& hole_kt,
                         const MomentumProfile& hole_ktp);

/// Hole profiles default to the mirrored electron profiles (kt = -k).
OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp);

/// Same, with a distinct hole width (analytic families only).
OverlapQuad overlap_quad(const MomentumProfile& electron_k,
                         const MomentumProfile& electron_kp,
                         double hole_width);

/// Closed-form quad for equal-family lorentzian profiles at distance d.
OverlapQuad lorentzian_quad(double delta_e, double delta_h, double d);

}  // namespace pauliphoton

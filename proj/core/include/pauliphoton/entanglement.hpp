// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "pauliphoton/photon_state.hpp"

namespace pauliphoton {

struct EntanglementReport {
  double concurrence = 0.0;         ///< Wootters eigen-computation
  double concurrence_x_form = 0.0;  ///< X-state closed form
  double negativity = 0.0;
  std::array<double, 4> spectrum{};  ///< descending sqrt-eigenvalues of rho rho~
};

/// Wootters concurrence of a normalized two-qubit state:
/// max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
/// eigenvalues of rho (Y(x)Y) rho* (Y(x)Y). Computed through the Hermitian
/// product sqrt(rho) rho~ sqrt(rho), so only self-adjoint eigensolvers are
/// involved. Throws std::domain_error for inputs that are not Hermitian,
/// normalized and positive semidefinite within tolerance.
double concurrence(const TwoQubitDM& dm);

/// The four descending sqrt-eigenvalues behind the concurrence.
std::array<double, 4> wootters_spectrum(const TwoQubitDM& dm);

/// Closed form for the overlap-quad family:
/// max(0, (M Mt - (L-M)(Lt-Mt)) / ((L-M)(Lt-Mt) + L Lt)).
/// With equal ratios r = M/L = Mt/Lt this is max(0, (2r-1)/((1-r)^2+1)).
double concurrence_x_state(const OverlapQuad& q);

/// Closed form read off a normalized X-shaped matrix:
/// 2 max(0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33)).
/// Throws std::domain_error when entries outside the X pattern exceed tol.
double concurrence_x_form(const TwoQubitDM& dm, double x_shape_tol = 1e-10);

/// Sum of |negative eigenvalues| of the partial transpose over the second
/// qubit. Zero iff separable for two qubits; 1/2 for Bell states.
double negativity(const TwoQubitDM& dm);

/// Full pipeline for one overlap quad: assemble, normalize, map to photon
/// polarization, measure.
EntanglementReport analyze(const OverlapQuad& q);

/// Partial transpose over the first or second qubit of a 4x4 two-qubit matrix.
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho, int qubit);

}  // namespace pauliphoton

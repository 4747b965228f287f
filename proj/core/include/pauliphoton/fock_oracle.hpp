// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "pauliphoton/fock.hpp"
#include "pauliphoton/profiles.hpp"

namespace pauliphoton {

/// Discretization of the momentum-broadened pair creation operator on a
/// grid: sum over grid points (j, l) of w_e[j] w_h[l] edag(spin, j) hdag(spin, l).
///
/// The weights carry one factor sqrt(spacing) per creation operator on top
/// of the profile value, the lattice normalization under which grid-mode
/// anticommutators are plain Kronecker deltas and matrix elements of
/// operator strings converge to their continuum integrals as the grid
/// refines.
struct PairCreationOp {
  int spin = 0;
  std::vector<std::complex<double>> electron_weights;  ///< per grid point
  std::vector<std::complex<double>> hole_weights;      ///< per grid point

  FockState operator()(const FockState& s) const;
};

/// Profile values on the grid times sqrt(spacing); throws std::domain_error
/// when every weight vanishes (degenerate profile on this grid).
std::vector<std::complex<double>> smear_weights(const MomentumProfile& p,
                                                const MomentumGrid& grid);

/// Builds the pair operator for an electron profile centered at k and a
/// hole profile centered at kt (conventionally kt = -k; the grid must be
/// symmetric about zero so the mirrored momenta stay on-grid).
PairCreationOp discretized_pair_creation(const MomentumProfile& electron,
                                         const MomentumProfile& hole, int spin,
                                         const MomentumGrid& grid);

/// Inputs for the brute-force density matrix: the two electron profiles
/// (centers k, k'), the two hole profiles (centers kt, kt'), and the grid.
struct OracleSetup {
  MomentumProfile electron_k;
  MomentumProfile electron_kp;
  MomentumProfile hole_kt;
  MomentumProfile hole_ktp;
  MomentumGrid grid;
};

/// Equal-width lorentzian setup with centers -d/2 and +d/2 (holes mirrored),
/// on a symmetric grid of `grid_points` points spanning +-grid_span.
OracleSetup lorentzian_oracle_setup(double delta_e, double delta_h, double d,
                                    int grid_points, double grid_span);

/// Default grid: +-(d/2 + 20 max_width) with at least min_points points
/// (count made odd so zero stays on-grid). Lorentzian tails fall off only
/// as x^-4 in the overlap integrands, so the span errs generous.
MomentumGrid default_oracle_grid(double max_width, double d,
                                 int min_points = 1001);

/// The 16 matrix elements <vac| P_r P_r' Pdag_s Pdag_s' |vac> of the
/// two-pair correlation function, computed by explicit operator application
/// on the discretized Fock space. Rows are indexed by (r, r') and columns
/// by (s, s') in the product-basis order |00>, |01>, |10>, |11>. Returned
/// unnormalized.
///
/// Uses the species factorization: each element is the product of an
/// electron-only and a hole-only four-operator vacuum expectation, each
/// evaluated as an inner product of explicitly constructed two-particle
/// states. Cost is O(grid^2) per element instead of O(grid^4).
Eigen::Matrix4cd oracle_density_matrix(const OracleSetup& setup);

/// Same matrix via literal four-particle states built with PairCreationOp,
/// with no species factorization. O(grid^4); intended for small grids to
/// validate the factorized route sign-by-sign.
Eigen::Matrix4cd oracle_density_matrix_unfactorized(const OracleSetup& setup);

}  // namespace pauliphoton

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "pauliphoton/overlaps.hpp"

namespace pauliphoton {

enum class BasisKind { spin, photon };

/// Two-qubit density matrix in a fixed product basis |00>, |01>, |10>, |11>.
/// In the spin basis a qubit is the logical spin of one electron-hole pair;
/// in the photon basis it is the polarization of one emitted photon, with
/// 0 = sigma_minus and 1 = sigma_plus.
struct TwoQubitDM {
  Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();
  BasisKind basis = BasisKind::spin;
  bool normalized = false;
};

/// The two-pair spin density matrix built from the overlap scalars:
/// diagonal ((L-M)(Lt-Mt), L Lt, L Lt, (L-M)(Lt-Mt)), with M Mt coupling
/// |01> and |10>, every other entry zero. Unnormalized, spin basis.
/// Throws std::domain_error when the quad violates M <= L.
TwoQubitDM assemble_density_matrix(const OverlapQuad& q);

/// Entries divided by the trace. Throws std::domain_error when the trace
/// is below tolerance (possible only when L = M = 0).
TwoQubitDM normalize(const TwoQubitDM& dm, double trace_tol = 1e-14);

enum class Polarization : std::uint8_t { sigma_minus, sigma_plus, forbidden };

/// Dipole selection rules: which circular polarization (if any) the
/// recombination of an (electron spin, hole spin) pair emits. Kept as data
/// so the sigma assignment can be swapped in one place; a global swap is a
/// local unitary and changes no entanglement number.
struct SelectionRuleTable {
  /// indexed [electron spin][hole spin]
  std::array<std::array<Polarization, 2>, 2> map;

  /// Heavy-hole transitions: (0,0) -> sigma_minus, (1,1) -> sigma_plus,
  /// mixed spins forbidden.
  static SelectionRuleTable heavy_hole_default();
  /// Same with the two polarizations exchanged.
  static SelectionRuleTable swapped();
};

/// Relabels the spin-basis states via the selection rules. The map is a
/// bijection on the populated basis states, so entries are permuted, never
/// altered; eigenvalues are preserved exactly. Throws std::domain_error if
/// the state has support on a forbidden spin combination and
/// std::invalid_argument for a non-bijective table.
TwoQubitDM map_to_polarization(const TwoQubitDM& dm,
                               const SelectionRuleTable& rules);

/// Serialized form used by the CLI dump: a JSON object with the basis tag,
/// the normalization flag, and the 16 complex entries in row-major order as
/// (re, im) pairs.
std::string to_json(const TwoQubitDM& dm);

/// max |A - Adag| entry.
double hermiticity_defect(const Eigen::Matrix4cd& m);
/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const Eigen::Matrix4cd& m);

}  // namespace pauliphoton

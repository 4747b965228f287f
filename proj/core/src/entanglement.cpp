// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauliphoton {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = 1e-10;
constexpr double kEigenClip = 1e-12;

void check_state(const TwoQubitDM& dm) {
  if (!dm.normalized || std::abs(dm.entries.trace().real() - 1.0) > kTraceTol) {
    throw std::domain_error("entanglement measures need a normalized state");
  }
  if (hermiticity_defect(dm.entries) > kHermTol) {
    throw std::domain_error("density matrix is not Hermitian within tolerance");
  }
  if (min_eigenvalue(dm.entries) < -kPsdTol) {
    throw std::domain_error("density matrix is not positive semidefinite");
  }
}

Eigen::Matrix4cd spin_flip_conjugate(const Eigen::Matrix4cd& rho) {
  // (Y (x) Y) rho* (Y (x) Y) in the computational basis
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.conjugate() * yy;
}

Eigen::Matrix4cd matrix_sqrt_psd(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  Eigen::Vector4d vals = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) vals(i) = std::sqrt(std::max(vals(i), 0.0));
  return solver.eigenvectors() * vals.asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace

std::array<double, 4> wootters_spectrum(const TwoQubitDM& dm) {
  check_state(dm);
  const Eigen::Matrix4cd root = matrix_sqrt_psd(0.5 * (dm.entries + dm.entries.adjoint()));
  const Eigen::Matrix4cd flipped = spin_flip_conjugate(dm.entries);
  const Eigen::Matrix4cd product = root * flipped * root;  // Hermitian, PSD

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(
      0.5 * (product + product.adjoint()));
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    double mu = solver.eigenvalues()(i);
    if (mu < 0.0) {
      if (mu < -kEigenClip) {
        throw std::domain_error("spin-flip spectrum has a significantly negative eigenvalue");
      }
      mu = 0.0;
    }
    lambdas[i] = std::sqrt(mu);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

double concurrence(const TwoQubitDM& dm) {
  const auto l = wootters_spectrum(dm);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_x_state(const OverlapQuad& q) {
  validate_overlap_quad(q, 1e-9);
  const double a = (q.L - q.M) * (q.Ltilde - q.Mtilde);
  const double b = q.L * q.Ltilde;
  const double m = q.M * q.Mtilde;
  const double denom = a + b;
  if (!(denom > 0.0)) {
    throw std::domain_error("degenerate quad: vanishing trace");
  }
  return std::max(0.0, (m - a) / denom);
}

double concurrence_x_form(const TwoQubitDM& dm, double x_shape_tol) {
  check_state(dm);
  const auto& e = dm.entries;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(e(i, j)) > x_shape_tol) {
        throw std::domain_error("matrix is not X-shaped within tolerance");
      }
    }
  }
  const double inner = std::abs(e(1, 2)) -
                       std::sqrt(std::max(0.0, e(0, 0).real() * e(3, 3).real()));
  const double outer = std::abs(e(0, 3)) -
                       std::sqrt(std::max(0.0, e(1, 1).real() * e(2, 2).real()));
  return 2.0 * std::max({0.0, inner, outer});
}

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho, int qubit) {
  if (qubit != 0 && qubit != 1) throw std::invalid_argument("qubit must be 0 or 1");
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          // qubit 0 is the first (most significant) factor
          const int row = a * 2 + b, col = c * 2 + d;
          const int trow = (qubit == 0) ? c * 2 + b : a * 2 + d;
          const int tcol = (qubit == 0) ? a * 2 + d : c * 2 + b;
          out(trow, tcol) = rho(row, col);
        }
      }
    }
  }
  return out;
}

double negativity(const TwoQubitDM& dm) {
  check_state(dm);
  const Eigen::Matrix4cd pt = partial_transpose(dm.entries, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(0.5 * (pt + pt.adjoint()));
  double neg = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double v = solver.eigenvalues()(i);
    if (v < 0.0) neg += -v;
  }
  return neg;
}

EntanglementReport analyze(const OverlapQuad& q) {
  const TwoQubitDM spin = normalize(assemble_density_matrix(q));
  const TwoQubitDM photon =
      map_to_polarization(spin, SelectionRuleTable::heavy_hole_default());
  EntanglementReport r;
  r.spectrum = wootters_spectrum(photon);
  r.concurrence = std::max(
      0.0, r.spectrum[0] - r.spectrum[1] - r.spectrum[2] - r.spectrum[3]);
  r.concurrence_x_form = concurrence_x_state(q);
  r.negativity = negativity(photon);
  return r;
}

}  // namespace pauliphoton

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/photon_state.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pauliphoton {

TwoQubitDM assemble_density_matrix(const OverlapQuad& q) {
  validate_overlap_quad(q, 1e-12);
  const double a = (q.L - q.M) * (q.Ltilde - q.Mtilde);
  const double b = q.L * q.Ltilde;
  const double m = q.M * q.Mtilde;

  TwoQubitDM dm;
  dm.basis = BasisKind::spin;
  dm.normalized = false;
  dm.entries.setZero();
  dm.entries(0, 0) = a;
  dm.entries(1, 1) = b;
  dm.entries(2, 2) = b;
  dm.entries(3, 3) = a;
  dm.entries(1, 2) = m;
  dm.entries(2, 1) = m;
  return dm;
}

TwoQubitDM normalize(const TwoQubitDM& dm, double trace_tol) {
  const double tr = dm.entries.trace().real();
  if (!(tr > trace_tol)) {
    throw std::domain_error("degenerate state: trace below tolerance");
  }
  TwoQubitDM out = dm;
  out.entries /= tr;
  out.normalized = true;
  return out;
}

SelectionRuleTable SelectionRuleTable::heavy_hole_default() {
  SelectionRuleTable t;
  t.map[0][0] = Polarization::sigma_minus;
  t.map[1][1] = Polarization::sigma_plus;
  t.map[0][1] = Polarization::forbidden;
  t.map[1][0] = Polarization::forbidden;
  return t;
}

SelectionRuleTable SelectionRuleTable::swapped() {
  SelectionRuleTable t = heavy_hole_default();
  t.map[0][0] = Polarization::sigma_plus;
  t.map[1][1] = Polarization::sigma_minus;
  return t;
}

TwoQubitDM map_to_polarization(const TwoQubitDM& dm,
                               const SelectionRuleTable& rules) {
  if (dm.basis != BasisKind::spin) {
    throw std::invalid_argument("map_to_polarization expects a spin-basis state");
  }

  // pair with logical spin b carries electron spin b and hole spin b
  std::array<int, 2> pol{};
  for (int b = 0; b < 2; ++b) {
    const Polarization p = rules.map[b][b];
    if (p == Polarization::forbidden) {
      // forbidden is only an error if the state actually populates b
      bool support = false;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const bool touches = ((i >> 1) == b) || ((i & 1) == b) ||
                               ((j >> 1) == b) || ((j & 1) == b);
          if (touches && std::abs(dm.entries(i, j)) > 0.0) support = true;
        }
      }
      if (support) {
        throw std::domain_error(
            "selection rule violation: state has support on a forbidden "
            "spin combination");
      }
      pol[b] = b;  // unpopulated; keep the label
    } else {
      pol[b] = (p == Polarization::sigma_plus) ? 1 : 0;
    }
  }
  if (rules.map[0][0] != Polarization::forbidden &&
      rules.map[1][1] != Polarization::forbidden && pol[0] == pol[1]) {
    throw std::invalid_argument("selection table maps both spins to one polarization");
  }

  auto permute = [&pol](int i) {
    return (pol[(i >> 1) & 1] << 1) | pol[i & 1];
  };

  TwoQubitDM out;
  out.basis = BasisKind::photon;
  out.normalized = dm.normalized;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.entries(permute(i), permute(j)) = dm.entries(i, j);
    }
  }
  return out;
}

std::string to_json(const TwoQubitDM& dm) {
  std::string out = "{\"basis\":\"";
  out += (dm.basis == BasisKind::spin) ? "spin" : "photon";
  out += "\",\"normalized\":";
  out += dm.normalized ? "true" : "false";
  out += ",\"entries\":[";
  char buf[64];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto z = dm.entries(i, j);
      std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", z.real(), z.imag());
      out += buf;
      if (i != 3 || j != 3) out += ',';
    }
  }
  out += "]}";
  return out;
}

double hermiticity_defect(const Eigen::Matrix4cd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::Matrix4cd& m) {
  const Eigen::Matrix4cd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm);
  return solver.eigenvalues().minCoeff();
}

}  // namespace pauliphoton

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauliphoton {

namespace {

void require_symmetric(const MomentumGrid& grid) {
  if (!grid.symmetric_about_zero()) {
    throw std::invalid_argument(
        "pair creation needs a grid symmetric about zero so that mirrored "
        "hole momenta stay on-grid");
  }
}

}  // namespace

std::vector<std::complex<double>> smear_weights(const MomentumProfile& p,
                                                const MomentumGrid& grid) {
  const double root_dk = std::sqrt(grid.spacing);
  std::vector<std::complex<double>> w(grid.points.size());
  double max_abs = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double v = profile_eval(p, grid.points[j]) * root_dk;
    w[j] = v;
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (max_abs == 0.0) {
    throw std::domain_error(
        "degenerate profile: every weight vanishes on this grid");
  }
  return w;
}

FockState PairCreationOp::operator()(const FockState& s) const {
  if (electron_weights.size() != hole_weights.size()) {
    throw std::invalid_argument("pair operator weight lengths differ");
  }
  const ModeSpace space(static_cast<int>(electron_weights.size()));
  // edag hdag: the hole smear acts first
  FockState with_hole =
      apply_smeared_creation(s, Species::hole, spin, hole_weights, space);
  return apply_smeared_creation(with_hole, Species::electron, spin,
                                electron_weights, space);
}

PairCreationOp discretized_pair_creation(const MomentumProfile& electron,
                                         const MomentumProfile& hole, int spin,
                                         const MomentumGrid& grid) {
  require_symmetric(grid);
  if (spin != 0 && spin != 1) throw std::invalid_argument("spin bit must be 0 or 1");
  PairCreationOp op;
  op.spin = spin;
  op.electron_weights = smear_weights(electron, grid);
  op.hole_weights = smear_weights(hole, grid);
  return op;
}

MomentumGrid default_oracle_grid(double max_width, double d, int min_points) {
  if (!(max_width > 0.0)) throw std::invalid_argument("width must be > 0");
  if (!(d >= 0.0)) throw std::invalid_argument("center distance must be >= 0");
  const double half_span = 0.5 * d + 20.0 * max_width;
  const int n = std::max(min_points, 3) | 1;  // odd keeps zero on-grid
  return MomentumGrid::symmetric(half_span, n);
}

OracleSetup lorentzian_oracle_setup(double delta_e, double delta_h, double d,
                                    int grid_points, double grid_span) {
  OracleSetup s;
  s.electron_k = lorentzian_profile(delta_e, -0.5 * d);
  s.electron_kp = lorentzian_profile(delta_e, +0.5 * d);
  s.hole_kt = lorentzian_profile(delta_h, +0.5 * d);   // kt  = -k
  s.hole_ktp = lorentzian_profile(delta_h, -0.5 * d);  // kt' = -k'
  s.grid = MomentumGrid::symmetric(grid_span, grid_points);
  return s;
}

namespace {

using Weights = std::vector<std::complex<double>>;

/// Four-operator vacuum expectations for one species:
/// F[r][r'][s][s'] = <vac| c_r[w1] c_r'[w2] cdag_s[w1] cdag_s'[w2] |vac>,
/// computed as inner products of two-particle states. The bra vector of
/// each element is cdag_r'[w2] cdag_r[w1] |vac>, the adjoint of the
/// annihilator pair acting on the vacuum.
using SpeciesFactor = std::array<std::array<std::array<std::array<std::complex<double>, 2>, 2>, 2>, 2>;

SpeciesFactor species_factor(Species species, const Weights& w1,
                             const Weights& w2, const ModeSpace& space) {
  const FockState vac = FockState::vacuum();
  auto two_particle = [&](int spin_first, const Weights& first, int spin_second,
                          const Weights& second) {
    // cdag[first] cdag[second] |vac>: rightmost operator acts first
    FockState inner_state =
        apply_smeared_creation(vac, species, spin_second, second, space);
    return apply_smeared_creation(inner_state, species, spin_first, first, space);
  };

  std::array<std::array<FockState, 2>, 2> kets;
  for (int s = 0; s < 2; ++s) {
    for (int sp = 0; sp < 2; ++sp) kets[s][sp] = two_particle(s, w1, sp, w2);
  }

  SpeciesFactor f{};
  for (int r = 0; r < 2; ++r) {
    for (int rp = 0; rp < 2; ++rp) {
      const FockState bra = two_particle(rp, w2, r, w1);
      for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
          f[r][rp][s][sp] = inner_product(bra, kets[s][sp]);
        }
      }
    }
  }
  return f;
}

}  // namespace

Eigen::Matrix4cd oracle_density_matrix(const OracleSetup& setup) {
  require_symmetric(setup.grid);
  const ModeSpace space(setup.grid.size());
  const Weights we1 = smear_weights(setup.electron_k, setup.grid);
  const Weights we2 = smear_weights(setup.electron_kp, setup.grid);
  const Weights wh1 = smear_weights(setup.hole_kt, setup.grid);
  const Weights wh2 = smear_weights(setup.hole_ktp, setup.grid);

  const SpeciesFactor electron = species_factor(Species::electron, we1, we2, space);
  const SpeciesFactor hole = species_factor(Species::hole, wh1, wh2, space);

  Eigen::Matrix4cd rho;
  for (int r = 0; r < 2; ++r) {
    for (int rp = 0; rp < 2; ++rp) {
      for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
          rho(r * 2 + rp, s * 2 + sp) = electron[r][rp][s][sp] * hole[r][rp][s][sp];
        }
      }
    }
  }
  return rho;
}

Eigen::Matrix4cd oracle_density_matrix_unfactorized(const OracleSetup& setup) {
  require_symmetric(setup.grid);
  std::array<PairCreationOp, 2> pair_k;   // spin 0, 1 at center k
  std::array<PairCreationOp, 2> pair_kp;  // spin 0, 1 at center k'
  for (int spin = 0; spin < 2; ++spin) {
    pair_k[spin] = discretized_pair_creation(setup.electron_k, setup.hole_kt,
                                             spin, setup.grid);
    pair_kp[spin] = discretized_pair_creation(setup.electron_kp, setup.hole_ktp,
                                              spin, setup.grid);
  }

  const FockState vac = FockState::vacuum();
  std::array<std::array<FockState, 2>, 2> kets;
  for (int s = 0; s < 2; ++s) {
    for (int sp = 0; sp < 2; ++sp) {
      // Pdag_s(k) Pdag_s'(k') |vac>
      kets[s][sp] = pair_k[s](pair_kp[sp](vac));
    }
  }

  Eigen::Matrix4cd rho;
  for (int r = 0; r < 2; ++r) {
    for (int rp = 0; rp < 2; ++rp) {
      // bra vector: Pdag_r'(k') Pdag_r(k) |vac>, adjoint of P_r(k) P_r'(k')
      const FockState bra = pair_kp[rp](pair_k[r](vac));
      for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
          rho(r * 2 + rp, s * 2 + sp) = inner_product(bra, kets[s][sp]);
        }
      }
    }
  }
  return rho;
}

}  // namespace pauliphoton

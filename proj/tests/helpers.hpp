// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <random>

#include "pauliphoton/fock.hpp"
#include "pauliphoton/overlaps.hpp"
#include "pauliphoton/wick.hpp"

namespace pauliphoton::testing {

inline std::complex<double> random_amplitude(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

/// Random sparse state over the given mode space with a handful of terms
/// and at most max_particles particles per term.
inline FockState random_state(std::mt19937& rng, const ModeSpace& space,
                              int max_terms = 6, int max_particles = 4) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<int> n_particles(0, max_particles);
  std::uniform_int_distribution<int> mode(0, space.size() - 1);
  FockState s;
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    OccupationKey key;
    const int particles = n_particles(rng);
    int placed = 0;
    while (placed < particles) {
      const auto id = static_cast<std::uint16_t>(mode(rng));
      if (key.occupied(id)) continue;
      key = key.with_inserted(key.rank(id), id);
      ++placed;
    }
    s.terms[key] += random_amplitude(rng);
  }
  s.prune_exact_zeros();
  return s;
}

/// Random valid overlap scalars: 0 <= M <= L, 0 <= Mtilde <= Ltilde.
inline OverlapQuad random_quad(std::mt19937& rng) {
  std::uniform_real_distribution<double> scale(0.05, 2.0);
  std::uniform_real_distribution<double> ratio(0.0, 1.0);
  OverlapQuad q;
  q.L = scale(rng);
  q.M = ratio(rng) * q.L;
  q.Ltilde = scale(rng);
  q.Mtilde = ratio(rng) * q.Ltilde;
  return q;
}

/// <vac| ops[0] ... ops[n-1] |vac> by explicit operator application,
/// rightmost operator first.
inline std::complex<double> string_vacuum_expectation(
    std::span<const OpSymbol> ops, const ModeSpace& space) {
  FockState state = FockState::vacuum();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const Mode m{it->species, it->spin, it->label};
    state = (it->kind == OpKind::create) ? apply_creation(state, m, space)
                                         : apply_annihilation(state, m, space);
    if (state.is_zero()) return 0.0;
  }
  return state.amplitude(OccupationKey{});
}

}  // namespace pauliphoton::testing

// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pauliphoton {

ModeSpace::ModeSpace(int grid_points) : grid_points_(grid_points) {
  if (grid_points < 1) {
    throw std::invalid_argument("ModeSpace needs at least one grid point");
  }
  if (4 * static_cast<long>(grid_points) >= OccupationKey::kEmpty) {
    throw std::invalid_argument("grid too large for 16-bit mode ids");
  }
}

std::uint16_t ModeSpace::id(const Mode& m) const {
  if (m.k_index < 0 || m.k_index >= grid_points_) {
    throw std::out_of_range("mode k_index " + std::to_string(m.k_index) +
                            " outside grid of " + std::to_string(grid_points_) +
                            " points; grid misconfigured?");
  }
  if (m.spin > 1) throw std::out_of_range("spin bit must be 0 or 1");
  const int species = static_cast<int>(m.species);
  return static_cast<std::uint16_t>((species * 2 + m.spin) * grid_points_ +
                                    m.k_index);
}

Mode ModeSpace::mode(std::uint16_t id) const {
  if (id >= size()) throw std::out_of_range("mode id outside mode space");
  const int block = id / grid_points_;
  return Mode{static_cast<Species>(block / 2),
              static_cast<std::uint8_t>(block % 2),
              static_cast<int>(id % grid_points_)};
}

MomentumGrid MomentumGrid::symmetric(double half_span, int n) {
  if (n < 2) throw std::invalid_argument("momentum grid needs >= 2 points");
  if (!(half_span > 0.0)) throw std::invalid_argument("grid half span must be > 0");
  MomentumGrid g;
  g.spacing = 2.0 * half_span / (n - 1);
  g.points.resize(n);
  for (int i = 0; i < n; ++i) g.points[i] = -half_span + i * g.spacing;
  return g;
}

bool MomentumGrid::symmetric_about_zero(double tol) const {
  const int n = size();
  for (int i = 0; i < n / 2 + 1; ++i) {
    if (std::abs(points[i] + points[n - 1 - i]) > tol) return false;
  }
  return true;
}

FockState FockState::vacuum() {
  FockState s;
  s.terms.emplace(OccupationKey{}, std::complex<double>{1.0, 0.0});
  return s;
}

double FockState::norm_squared() const {
  double n2 = 0.0;
  for (const auto& [key, amp] : terms) n2 += std::norm(amp);
  return n2;
}

std::complex<double> FockState::amplitude(const OccupationKey& key) const {
  const auto it = terms.find(key);
  return it == terms.end() ? std::complex<double>{} : it->second;
}

void FockState::prune_exact_zeros() {
  for (auto it = terms.begin(); it != terms.end();) {
    it = (it->second == std::complex<double>{}) ? terms.erase(it) : std::next(it);
  }
}

namespace {

double parity_sign(int rank) { return (rank % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

FockState apply_creation(const FockState& s, std::uint16_t mode_id) {
  FockState out;
  out.terms.reserve(s.terms.size());
  for (const auto& [key, amp] : s.terms) {
    if (key.occupied(mode_id)) continue;  // Pauli exclusion
    if (key.count() == OccupationKey::kMaxParticles) {
      throw std::length_error("FockState particle capacity exceeded");
    }
    const int pos = key.rank(mode_id);
    // adding a mode to distinct sets yields distinct sets: no accumulation
    out.terms.emplace(key.with_inserted(pos, mode_id), parity_sign(pos) * amp);
  }
  return out;
}

FockState apply_creation(const FockState& s, const Mode& m, const ModeSpace& space) {
  return apply_creation(s, space.id(m));
}

FockState apply_annihilation(const FockState& s, std::uint16_t mode_id) {
  FockState out;
  out.terms.reserve(s.terms.size());
  for (const auto& [key, amp] : s.terms) {
    if (!key.occupied(mode_id)) continue;
    const int pos = key.rank(mode_id);
    out.terms.emplace(key.with_removed(pos), parity_sign(pos) * amp);
  }
  return out;
}

FockState apply_annihilation(const FockState& s, const Mode& m, const ModeSpace& space) {
  return apply_annihilation(s, space.id(m));
}

FockState apply_smeared_creation(const FockState& s, Species species, int spin,
                                 std::span<const std::complex<double>> weights,
                                 const ModeSpace& space) {
  if (static_cast<int>(weights.size()) != space.grid_points()) {
    throw std::invalid_argument("weights length must equal grid size");
  }
  const std::uint16_t base = space.id(Mode{species, static_cast<std::uint8_t>(spin), 0});
  std::size_t nonzero_weights = 0;
  for (const auto& w : weights) {
    if (w != std::complex<double>{}) ++nonzero_weights;
  }
  FockState out;
  // the result has at most one term per (input term, weight) pair; sizing
  // the table up front avoids rehashing through millions of inserts
  out.terms.reserve(std::min<std::size_t>(s.terms.size() * nonzero_weights,
                                          std::size_t{1} << 23));
  for (const auto& [key, amp] : s.terms) {
    const int occupied_count = key.count();
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const std::complex<double> w = weights[j];
      if (w == std::complex<double>{}) continue;
      const std::uint16_t id = static_cast<std::uint16_t>(base + j);
      if (key.occupied(id)) continue;
      if (occupied_count == OccupationKey::kMaxParticles) {
        throw std::length_error("FockState particle capacity exceeded");
      }
      const int pos = key.rank(id);
      const std::complex<double> val = parity_sign(pos) * w * amp;
      auto [it, inserted] = out.terms.try_emplace(key.with_inserted(pos, id), val);
      if (!inserted) it->second += val;
    }
  }
  out.prune_exact_zeros();
  return out;
}

std::complex<double> inner_product(const FockState& bra, const FockState& ket) {
  const FockState& small = bra.terms.size() <= ket.terms.size() ? bra : ket;
  const FockState& large = bra.terms.size() <= ket.terms.size() ? ket : bra;
  const bool small_is_bra = &small == &bra;
  std::complex<double> acc{};
  for (const auto& [key, amp] : small.terms) {
    const auto it = large.terms.find(key);
    if (it == large.terms.end()) continue;
    acc += small_is_bra ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return acc;
}

}  // namespace pauliphoton

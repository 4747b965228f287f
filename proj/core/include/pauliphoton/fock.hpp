// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace pauliphoton {

enum class Species : std::uint8_t { electron = 0, hole = 1 };

/// One fermionic orbital: species, logical spin bit, index into the
/// momentum grid. Modes are totally ordered as (species, spin, kIndex);
/// every fermionic sign in this library is defined relative to that order.
struct Mode {
  Species species = Species::electron;
  std::uint8_t spin = 0;  ///< logical spin bit
  int k_index = 0;        ///< momentum grid index

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Maps Modes to dense ids in mode order for a grid of fixed size.
class ModeSpace {
 public:
  explicit ModeSpace(int grid_points);

  /// Throws std::out_of_range when k_index falls outside the grid.
  std::uint16_t id(const Mode& m) const;
  Mode mode(std::uint16_t id) const;

  int grid_points() const { return grid_points_; }
  int size() const { return 4 * grid_points_; }

 private:
  int grid_points_;
};

/// Uniform momentum grid; same dimensionless units as widths and centers.
struct MomentumGrid {
  std::vector<double> points;  ///< strictly increasing, uniform
  double spacing = 0.0;

  /// n points covering [-half_span, +half_span].
  static MomentumGrid symmetric(double half_span, int n);
  int size() const { return static_cast<int>(points.size()); }
  bool symmetric_about_zero(double tol = 1e-9) const;
};

/// Occupied mode ids, sorted ascending and padded with kEmpty. Stands in
/// for the occupation bitstring: with at most two electron-hole pairs in
/// play, the occupied set never exceeds kMaxParticles.
struct OccupationKey {
  static constexpr int kMaxParticles = 8;
  static constexpr std::uint16_t kEmpty = 0xFFFF;

  std::array<std::uint16_t, kMaxParticles> slots;

  constexpr OccupationKey() : slots{} { slots.fill(kEmpty); }

  int count() const {
    int n = 0;
    while (n < kMaxParticles && slots[n] != kEmpty) ++n;
    return n;
  }
  bool occupied(std::uint16_t id) const {
    for (auto s : slots) {
      if (s == id) return true;
      if (s >= id) return false;  // sorted; kEmpty is the maximum
    }
    return false;
  }
  /// Number of occupied modes preceding `id` in mode order.
  int rank(std::uint16_t id) const {
    int r = 0;
    while (r < kMaxParticles && slots[r] < id) ++r;
    return r;
  }
  OccupationKey with_inserted(int pos, std::uint16_t id) const {
    OccupationKey k = *this;
    for (int i = kMaxParticles - 1; i > pos; --i) k.slots[i] = k.slots[i - 1];
    k.slots[pos] = id;
    return k;
  }
  OccupationKey with_removed(int pos) const {
    OccupationKey k = *this;
    for (int i = pos; i + 1 < kMaxParticles; ++i) k.slots[i] = k.slots[i + 1];
    k.slots[kMaxParticles - 1] = kEmpty;
    return k;
  }

  friend bool operator==(const OccupationKey&, const OccupationKey&) = default;
};

struct OccupationKeyHash {
  std::size_t operator()(const OccupationKey& k) const noexcept {
    const auto words = std::bit_cast<std::array<std::uint64_t, 2>>(k.slots);
    std::uint64_t h = (words[0] + 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
    h = (h ^ words[1]) * 0x94d049bb133111ebULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

/// Sparse superposition of occupation keys with complex amplitudes.
/// Terms with amplitude exactly zero are never stored; the zero state is
/// the empty map and the vacuum a single empty key with amplitude one.
struct FockState {
  using TermMap =
      std::unordered_map<OccupationKey, std::complex<double>, OccupationKeyHash>;
  TermMap terms;

  static FockState vacuum();
  static FockState zero() { return {}; }

  bool is_zero() const { return terms.empty(); }
  double norm_squared() const;
  std::complex<double> amplitude(const OccupationKey& key) const;
  /// Drops terms whose amplitude compares equal to zero.
  void prune_exact_zeros();
};

/// cdag on every term: occupied modes annihilate the term (Pauli), empty
/// ones gain the particle with sign (-1)^(occupied modes before it).
FockState apply_creation(const FockState& s, std::uint16_t mode_id);
FockState apply_creation(const FockState& s, const Mode& m, const ModeSpace& space);

/// Adjoint of apply_creation.
FockState apply_annihilation(const FockState& s, std::uint16_t mode_id);
FockState apply_annihilation(const FockState& s, const Mode& m, const ModeSpace& space);

/// sum_j weights[j] cdag(species, spin, j) applied to s; weights are
/// indexed by grid point and zero weights are skipped.
FockState apply_smeared_creation(const FockState& s, Species species, int spin,
                                 std::span<const std::complex<double>> weights,
                                 const ModeSpace& space);

/// <bra|ket> = sum over shared keys of conj(bra) * ket.
std::complex<double> inner_product(const FockState& bra, const FockState& ket);

}  // namespace pauliphoton

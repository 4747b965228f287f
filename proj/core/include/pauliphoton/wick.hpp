// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "pauliphoton/fock.hpp"
#include "pauliphoton/overlaps.hpp"

namespace pauliphoton {

enum class OpKind : std::uint8_t { create, annihilate };

/// One symbol in an operator string. The label is an opaque momentum tag:
/// a grid index for discrete strings, or a center tag (0 for k, 1 for k')
/// when the contraction values come from smeared profile overlaps.
struct OpSymbol {
  OpKind kind = OpKind::create;
  Species species = Species::electron;
  std::uint8_t spin = 0;
  int label = 0;

  OpSymbol adjoint() const {
    OpSymbol a = *this;
    a.kind = (kind == OpKind::create) ? OpKind::annihilate : OpKind::create;
    return a;
  }
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

OpSymbol create_op(Species species, int spin, int label);
OpSymbol annihilate_op(Species species, int spin, int label);

/// Value of one contraction <vac| (annihilator) (creator) |vac>.
/// Must vanish whenever species or spin differ.
struct ContractionKernel {
  std::function<std::complex<double>(const OpSymbol& annihilator,
                                     const OpSymbol& creator)>
      pair_value;
};

/// Discrete modes: delta on (species, spin, label).
ContractionKernel kronecker_kernel();

/// Smeared modes tagged by center: value[a][b] is the overlap integral of
/// the profile at center tag a against the profile at center tag b, one
/// 2x2 table per species.
ContractionKernel center_overlap_kernel(
    const std::array<std::array<double, 2>, 2>& electron,
    const std::array<std::array<double, 2>, 2>& hole);

/// Kernel whose center-tag tables are built from an OverlapQuad:
/// diagonal sqrt(L), off-diagonal sqrt(M) per species.
ContractionKernel quad_kernel(const OverlapQuad& q);

/// <vac| ops[0] ops[1] ... |vac> as the signed sum over all complete
/// contractions pairing each annihilator with a creator to its right.
/// The sign of a matching is (-1)^(number of crossing chord pairs).
/// Strings with no such matching (odd length, unbalanced kinds, a creator
/// that no annihilator can reach) evaluate to zero.
std::complex<double> vacuum_expectation(std::span<const OpSymbol> ops,
                                        const ContractionKernel& kernel);

/// The closed form the contraction sum reduces to for the smeared two-pair
/// correlator: (L-M)(Lt-Mt) when r=r'=s=s'; L*Lt when r=s, r'=s', r!=r';
/// M*Mt when r=s', r'=s, r!=r'; zero otherwise.
double smeared_matrix_element(int r, int rp, int s, int sp,
                              const OverlapQuad& q);

/// Matching sign via sequential adjacent transpositions instead of chord
/// crossings; exposed so tests can pin the equivalence of the two rules.
/// pairs[i] = (annihilator position, creator position).
int matching_sign_by_transpositions(
    std::span<const std::pair<int, int>> pairs);
int matching_sign_by_crossings(std::span<const std::pair<int, int>> pairs);

}  // namespace pauliphoton

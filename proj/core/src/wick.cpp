// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include "pauliphoton/wick.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauliphoton {

OpSymbol create_op(Species species, int spin, int label) {
  return OpSymbol{OpKind::create, species, static_cast<std::uint8_t>(spin), label};
}

OpSymbol annihilate_op(Species species, int spin, int label) {
  return OpSymbol{OpKind::annihilate, species, static_cast<std::uint8_t>(spin), label};
}

ContractionKernel kronecker_kernel() {
  return {[](const OpSymbol& a, const OpSymbol& c) -> std::complex<double> {
    const bool match =
        a.species == c.species && a.spin == c.spin && a.label == c.label;
    return match ? 1.0 : 0.0;
  }};
}

ContractionKernel center_overlap_kernel(
    const std::array<std::array<double, 2>, 2>& electron,
    const std::array<std::array<double, 2>, 2>& hole) {
  return {[electron, hole](const OpSymbol& a,
                           const OpSymbol& c) -> std::complex<double> {
    if (a.species != c.species || a.spin != c.spin) return 0.0;
    if (a.label < 0 || a.label > 1 || c.label < 0 || c.label > 1) {
      throw std::invalid_argument("center tags must be 0 or 1");
    }
    const auto& table = (a.species == Species::electron) ? electron : hole;
    return table[a.label][c.label];
  }};
}

ContractionKernel quad_kernel(const OverlapQuad& q) {
  validate_overlap_quad(q, 1e-9);
  const double se = std::sqrt(q.L);                      // per-factor self overlap
  const double ge = std::sqrt(std::max(q.M, 0.0));       // per-factor cross overlap
  const double sh = std::sqrt(q.Ltilde);
  const double gh = std::sqrt(std::max(q.Mtilde, 0.0));
  return center_overlap_kernel({{{se, ge}, {ge, se}}}, {{{sh, gh}, {gh, sh}}});
}

namespace {

struct MatchingSum {
  std::span<const OpSymbol> ops;
  const ContractionKernel& kernel;
  std::vector<int> partner;             // -1 while unpaired
  std::vector<std::pair<int, int>> pairs;
  std::complex<double> total{};

  void search(std::complex<double> weight, int sign) {
    const int n = static_cast<int>(ops.size());
    int i = 0;
    while (i < n && partner[i] >= 0) ++i;
    if (i == n) {
      total += static_cast<double>(sign) * weight;
      return;
    }
    // an unpaired creator can only contract with an annihilator to its
    // left, and everything to its left is already paired: dead branch
    if (ops[i].kind == OpKind::create) return;

    for (int j = i + 1; j < n; ++j) {
      if (partner[j] >= 0 || ops[j].kind != OpKind::create) continue;
      const std::complex<double> v = kernel.pair_value(ops[i], ops[j]);
      if (v == std::complex<double>{}) continue;
      // chord (i, j) crosses every earlier chord (i', j') with i' < i < j' < j
      int crossings = 0;
      for (const auto& [pi, pj] : pairs) {
        if (pj > i && pj < j) ++crossings;
      }
      partner[i] = j;
      partner[j] = i;
      pairs.emplace_back(i, j);
      search(weight * v, (crossings % 2 == 0) ? sign : -sign);
      pairs.pop_back();
      partner[i] = -1;
      partner[j] = -1;
    }
  }
};

}  // namespace

std::complex<double> vacuum_expectation(std::span<const OpSymbol> ops,
                                        const ContractionKernel& kernel) {
  if (ops.empty()) return 1.0;
  if (ops.size() % 2 != 0) return 0.0;
  MatchingSum sum{ops, kernel, std::vector<int>(ops.size(), -1), {}, {}};
  sum.search(1.0, +1);
  return sum.total;
}

double smeared_matrix_element(int r, int rp, int s, int sp,
                              const OverlapQuad& q) {
  validate_overlap_quad(q, 1e-9);
  for (int bit : {r, rp, s, sp}) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("spin index must be 0 or 1");
  }
  if (r == rp) {
    return (s == r && sp == r) ? (q.L - q.M) * (q.Ltilde - q.Mtilde) : 0.0;
  }
  if (r == s && rp == sp) return q.L * q.Ltilde;
  if (r == sp && rp == s) return q.M * q.Mtilde;
  return 0.0;
}

int matching_sign_by_crossings(std::span<const std::pair<int, int>> pairs) {
  int crossings = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i1, j1] = pairs[a];
      const auto [i2, j2] = pairs[b];
      const int lo1 = std::min(i1, j1), hi1 = std::max(i1, j1);
      const int lo2 = std::min(i2, j2), hi2 = std::max(i2, j2);
      const bool crossed = (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
                           (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
      if (crossed) ++crossings;
    }
  }
  return (crossings % 2 == 0) ? +1 : -1;
}

int matching_sign_by_transpositions(
    std::span<const std::pair<int, int>> pairs) {
  // remove pairs left to right; each removal costs one transposition per
  // not-yet-removed operator sitting strictly between the two ends
  std::vector<std::pair<int, int>> sorted(pairs.begin(), pairs.end());
  for (auto& [i, j] : sorted) {
    if (i > j) std::swap(i, j);
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> removed;
  int max_pos = 0;
  for (const auto& [i, j] : sorted) max_pos = std::max(max_pos, j);
  removed.assign(max_pos + 1, false);

  int parity = 0;
  for (const auto& [i, j] : sorted) {
    for (int p = i + 1; p < j; ++p) {
      if (!removed[p]) ++parity;
    }
    removed[i] = true;
    removed[j] = true;
  }
  return (parity % 2 == 0) ? +1 : -1;
}

}  // namespace pauliphoton

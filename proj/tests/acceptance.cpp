// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Each check prints one PASS/FAIL line with the measured
// figure next to its pinned tolerance; the process exits nonzero if any
// check fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "pauliphoton/entanglement.hpp"
#include "pauliphoton/fock_oracle.hpp"
#include "pauliphoton/overlaps.hpp"
#include "pauliphoton/photon_state.hpp"
#include "pauliphoton/sweep.hpp"
#include "pauliphoton/wick.hpp"

using namespace pauliphoton;
using pauliphoton::testing::random_quad;
using pauliphoton::testing::string_vacuum_expectation;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", number, name,
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// --- 1. maximal entanglement at d = 0 --------------------------------------

void criterion_1() {
  double worst = 0.0;
  for (const double width : {0.5, 2.0, 4.0, 6.0}) {
    const OverlapQuad q = lorentzian_quad(width, width, 0.0);
    worst = std::max(worst, std::abs(analyze(q).concurrence - 1.0));
  }
  for (const double sigma : {1.0, 3.0}) {
    const OverlapQuad q = overlap_quad(gaussian_profile(sigma, 0.0),
                                       gaussian_profile(sigma, 0.0));
    worst = std::max(worst, std::abs(analyze(q).concurrence - 1.0));
  }
  report(1, "concurrence = 1 at d = 0 for every width", worst <= 1e-9,
         fmt("max |C-1| = %.3g, tol 1e-9", worst));
}

// --- 2. four-operator correlator table --------------------------------------

void criterion_2() {
  const ContractionKernel kernel = kronecker_kernel();
  const ModeSpace space(1);
  bool exact = true;
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  for (int r = 0; r < 2; ++r) {
    for (int rp = 0; rp < 2; ++rp) {
      for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
          const double expected =
              delta(r, sp) * delta(rp, s) - delta(r, s) * delta(rp, sp);
          const std::vector<OpSymbol> electron = {
              annihilate_op(Species::electron, r, 0),
              annihilate_op(Species::electron, rp, 0),
              create_op(Species::electron, s, 0),
              create_op(Species::electron, sp, 0)};
          std::vector<OpSymbol> hole;
          for (const OpSymbol& op : electron) {
            OpSymbol h = op;
            h.species = Species::hole;
            hole.push_back(h);
          }

          const std::complex<double> by_wick = vacuum_expectation(electron, kernel);
          const std::complex<double> by_fock =
              string_vacuum_expectation(electron, space);
          if (by_wick != std::complex<double>{expected, 0.0}) exact = false;
          if (by_fock != std::complex<double>{expected, 0.0}) exact = false;

          // the full two-species correlator is the squared table entry
          std::vector<OpSymbol> full;
          full.push_back(electron[0]);
          full.push_back(hole[0]);
          full.push_back(electron[1]);
          full.push_back(hole[1]);
          full.push_back(hole[2]);
          full.push_back(electron[2]);
          full.push_back(hole[3]);
          full.push_back(electron[3]);
          const std::complex<double> pair_wick = vacuum_expectation(full, kernel);
          const std::complex<double> pair_fock =
              string_vacuum_expectation(full, space);
          if (std::abs(pair_wick - expected * expected) > 0.0) exact = false;
          if (std::abs(pair_fock - expected * expected) > 0.0) exact = false;
        }
      }
    }
  }
  report(2, "contraction sum and Fock oracle reproduce the exclusion table",
         exact, exact ? "all 16 entries exact" : "mismatch");
}

// --- 3. oracle equivalence on the pinned grids ------------------------------

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& [delta, d] :
       std::vector<std::pair<double, double>>{{2.0, 0.0}, {2.0, 2.0}, {4.0, 4.0}}) {
    const TwoQubitDM analytic =
        normalize(assemble_density_matrix(lorentzian_quad(delta, delta, d)));
    Eigen::Matrix4cd oracle =
        oracle_density_matrix(lorentzian_oracle_setup(delta, delta, d, 1001, 40.0));
    oracle /= oracle.trace().real();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double a = std::abs(analytic.entries(i, j));
        const double dev =
            std::abs(oracle(i, j) - analytic.entries(i, j)) / std::max(a, 1e-12);
        worst = std::max(worst, dev);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(3, "1001-point Fock oracle matches the closed form entrywise",
         worst <= 1e-3 && seconds < 60.0,
         fmt("max rel dev = %.3g, tol 1e-3; %.1f s", worst, seconds));
}

// --- 4. quadrature agrees with the lorentzian closed forms ------------------

void criterion_4() {
  constexpr double pi = std::numbers::pi;
  double worst = 0.0;
  for (const double delta : {2.0, 4.0}) {
    for (const double ratio : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double d = ratio * delta;
      const MomentumProfile p1 = lorentzian_profile(delta, -0.5 * d);
      const MomentumProfile p2 = lorentzian_profile(delta, +0.5 * d);

      const double L_quad =
          self_overlap_quadrature(p1) * self_overlap_quadrature(p2);
      const double L_closed = std::pow(1.0 / (2.0 * pi * delta), 2);
      worst = std::max(worst, std::abs(L_quad - L_closed) / L_closed);

      const double g = cross_overlap_quadrature(p1, p2);
      const double M_quad = g * cross_overlap_quadrature(p2, p1);
      const double M_closed =
          std::pow(2.0 * delta / (pi * (d * d + 4.0 * delta * delta)), 2);
      worst = std::max(worst, std::abs(M_quad - M_closed) / M_closed);
    }
  }
  report(4, "quadrature reproduces the closed-form L and M", worst <= 1e-6,
         fmt("max rel dev = %.3g, tol 1e-6", worst));
}

// --- 5. concurrence-versus-distance curves ----------------------------------

void criterion_5() {
  SweepSpec spec;
  spec.widths = {2.0, 4.0, 6.0};
  spec.d_range = {0.0, 10.0, 101};
  const auto rows = run_sweep(spec);
  const int steps = spec.d_range.steps;

  bool unit_at_zero = true;
  bool monotone = true;
  bool ordered = true;
  bool zero_past_threshold = true;

  auto curve = [&](int w, int i) { return rows[w * steps + i].concurrence; };

  for (int w = 0; w < 3; ++w) {
    if (std::abs(curve(w, 0) - 1.0) > 1e-9) unit_at_zero = false;
    const double threshold =
        2.0 * spec.widths[w] * std::sqrt(std::sqrt(2.0) - 1.0);
    for (int i = 0; i < steps; ++i) {
      if (i > 0 && curve(w, i) > curve(w, i - 1) + 1e-12) monotone = false;
      if (rows[w * steps + i].d >= threshold && curve(w, i) > 1e-9) {
        zero_past_threshold = false;
      }
    }
  }
  for (int i = 1; i < steps; ++i) {
    if (curve(1, i) < curve(0, i) - 1e-12) ordered = false;
    if (curve(2, i) < curve(1, i) - 1e-12) ordered = false;
  }

  report(5, "curves: 1 at d=0, non-increasing, wider above narrower, 0 past d*",
         unit_at_zero && monotone && ordered && zero_past_threshold,
         std::string("unit=") + (unit_at_zero ? "yes" : "no") +
             " monotone=" + (monotone ? "yes" : "no") +
             " ordered=" + (ordered ? "yes" : "no") +
             " threshold=" + (zero_past_threshold ? "yes" : "no"));
}

// --- 6. spot value at delta = 2, d = 2 --------------------------------------

void criterion_6() {
  const OverlapQuad q = lorentzian_quad(2.0, 2.0, 2.0);
  const double closed = concurrence_x_state(q);
  const double general = concurrence(
      map_to_polarization(normalize(assemble_density_matrix(q)),
                          SelectionRuleTable::heavy_hole_default()));
  const bool pass = std::abs(closed - 0.247876) <= 1e-5 &&
                    std::abs(general - 0.247876) <= 1e-5 &&
                    std::abs(closed - general) <= 1e-10;
  report(6, "delta = 2, d = 2 gives concurrence 0.247876 on both routes", pass,
         fmt("closed %.9f, eigen %.9f, tol 1e-5", closed, general));
}

// --- 7. measure consistency on random states --------------------------------

void criterion_7() {
  std::mt19937 rng(20260808);
  bool ppt_consistent = true;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const OverlapQuad q = random_quad(rng);
    const TwoQubitDM dm = normalize(assemble_density_matrix(q));
    const double c = concurrence(dm);
    const double n = negativity(dm);
    if ((c > 1e-9) != (n > 1e-12)) ppt_consistent = false;
    worst_gap = std::max(worst_gap, std::abs(c - concurrence_x_state(q)));
  }
  report(7, "concurrence, closed form and negativity agree on 1000 states",
         ppt_consistent && worst_gap <= 1e-10,
         fmt("max |C_eigen - C_closed| = %.3g, tol 1e-10; PPT ", worst_gap) +
             (ppt_consistent ? "consistent" : "violated"));
}

// --- 8. fermionic algebra property suite ------------------------------------

void criterion_8() {
  std::mt19937 rng(606);
  const ModeSpace space(2);
  std::uniform_int_distribution<int> mode(0, space.size() - 1);

  bool nilpotent = true;
  bool antisymmetric = true;
  bool adjoint_ok = true;
  bool wick_matches = true;

  for (int trial = 0; trial < 200; ++trial) {
    const FockState s = pauliphoton::testing::random_state(rng, space);
    const auto a = static_cast<std::uint16_t>(mode(rng));
    auto b = static_cast<std::uint16_t>(mode(rng));
    if (b == a) b = static_cast<std::uint16_t>((b + 1) % space.size());

    if (!apply_creation(apply_creation(s, a), a).is_zero()) nilpotent = false;

    const FockState ab = apply_creation(apply_creation(s, b), a);
    const FockState ba = apply_creation(apply_creation(s, a), b);
    for (const auto& [key, amp] : ab.terms) {
      if (std::abs(ba.amplitude(key) + amp) > 0.0) antisymmetric = false;
    }

    const FockState x = pauliphoton::testing::random_state(rng, space);
    const std::complex<double> lhs = inner_product(apply_creation(x, a), s);
    const std::complex<double> rhs = inner_product(x, apply_annihilation(s, a));
    if (std::abs(lhs - rhs) > 1e-12) adjoint_ok = false;
  }

  const ContractionKernel kernel = kronecker_kernel();
  std::uniform_int_distribution<int> coin(0, 1);
  int nonzero = 0;
  auto compare_routes = [&](const std::vector<OpSymbol>& ops) {
    const std::complex<double> by_wick = vacuum_expectation(ops, kernel);
    const std::complex<double> by_fock = string_vacuum_expectation(ops, space);
    if (std::abs(by_wick - by_fock) > 1e-12) wick_matches = false;
    if (std::abs(by_fock) > 0.5) ++nonzero;
  };

  for (int trial = 0; trial < 150; ++trial) {
    std::vector<OpSymbol> ops;
    for (int i = 0; i < 3; ++i) {
      const Mode m = space.mode(static_cast<std::uint16_t>(mode(rng)));
      ops.push_back(create_op(m.species, m.spin, m.k_index));
      const Mode m2 = space.mode(static_cast<std::uint16_t>(mode(rng)));
      ops.push_back(annihilate_op(m2.species, m2.spin, m2.k_index));
    }
    std::shuffle(ops.begin(), ops.end(), rng);
    if (coin(rng)) ops.pop_back(), ops.pop_back();  // also cover 4-op strings
    compare_routes(ops);
  }
  // fully contractible family: annihilators of three distinct modes, then
  // their creators in random order; the value is always a sign
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint16_t> ids(space.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::uint16_t>(i);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(3);
    std::vector<OpSymbol> ops;
    for (const auto id : ids) {
      const Mode m = space.mode(id);
      ops.push_back(annihilate_op(m.species, m.spin, m.k_index));
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    for (const auto id : ids) {
      const Mode m = space.mode(id);
      ops.push_back(create_op(m.species, m.spin, m.k_index));
    }
    compare_routes(ops);
  }

  const bool pass = nilpotent && antisymmetric && adjoint_ok && wick_matches &&
                    nonzero >= 100;
  report(8, "nilpotency, antisymmetry, adjointness, contraction-vs-oracle", pass,
         std::string("nilpotent=") + (nilpotent ? "yes" : "no") +
             " antisymmetric=" + (antisymmetric ? "yes" : "no") +
             " adjoint=" + (adjoint_ok ? "yes" : "no") +
             " wick=" + (wick_matches ? "yes" : "no") +
             fmt(" nonzero cases=%g", nonzero));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria satisfied\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}

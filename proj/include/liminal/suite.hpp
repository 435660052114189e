// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "liminal/bigint.hpp"

// Deformation counts for the degree n+2 hypersurface Y in P^{n+1} with an
// isolated 0-liminal point whose tangent cone is the Fermat cone of degree n+1.
namespace liminal::suite {

inline constexpr int kDefaultMaxN = 64;

BigInt binomial(unsigned n, unsigned k);

/// dim T^1_Y = C(2n+3, n+2) - (n+2)^2.
BigInt global_t1_dim(int n);
/// dim |A| = C(2n+2, n) - (n+1) - 1.
BigInt dim_A_system(int n);
/// Moduli of the Calabi-Yau hypersurface E: C(2n+1, n+1) - (n+1)^2.
BigInt moduli_E_dim(int n);
/// t_- of the Fermat cone: C(2n+1, n) - (n+1).
BigInt t_minus_formula(int n);

struct IdentityWitness {
  BigInt dim_A;
  BigInt moduli_E;
  BigInt t_minus;
  BigInt global_t1;
  /// dim_A + moduli_E + t_minus == global_t1.
  bool holds = false;
  /// t_minus equals the negative weight space of (1^{n+1}; n+1) computed from
  /// the graded Milnor algebra.
  bool fermat_t_minus_matches = false;
};

IdentityWitness verify_identity(int n);

struct LocalImageDims {
  BigInt full;
  BigInt image;
  BigInt codim;
};

/// #{alpha in {0..bound}^vars : sum alpha <= total} by inclusion-exclusion.
BigInt bounded_composition_count(unsigned vars, unsigned bound, unsigned total);

/// full = n^{n+1}; image counts exponent vectors in {0..n-1}^{n+1} of total
/// degree at most n+2. Requires n >= 2.
LocalImageDims local_image_dims(int n);

struct Degree5SeriesReport {
  int n = 0;
  BigInt global_t1;
  BigInt pair_moduli;
  BigInt dim_A_system;
  BigInt moduli_E;
  BigInt t_minus;
  bool identity_holds = false;
  bool fermat_t_minus_matches = false;
  /// n = 3: H^2(Omega^{n-1}(log E)) is nonzero, the identity is checked by count.
  bool special_case = false;
  BigInt local_full;
  BigInt local_image;
  BigInt local_codim;
};

/// Reports for n_min..n_max inclusive; requires 3 <= n_min <= n_max <= n_cap.
std::vector<Degree5SeriesReport> series_report(int n_min, int n_max, int n_cap = kDefaultMaxN);

}  // namespace liminal::suite

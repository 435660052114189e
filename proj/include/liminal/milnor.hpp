// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "liminal/bigint.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

/// Hilbert-Poincare polynomial of the graded Milnor algebra C[z]/(df).
/// coeffs[m] is the dimension of the weighted-degree-m piece.
struct PoincarePolynomial {
  std::vector<BigInt> coeffs;

  std::size_t top_degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt milnor_number() const;
  bool palindromic() const;
};

struct SpectralEntry {
  Rational value;
  BigInt multiplicity;

  friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

/// Steenbrink spectrum, normalized to lie in (0, n+1); entries ascending.
struct Spectrum {
  std::vector<SpectralEntry> entries;
  int dim = 0;

  BigInt total_multiplicity() const;
  /// Invariance of the multiset under l -> n+1-l.
  bool symmetric() const;
};

/// Throws NonPolynomialQuotient when the quotient leaves a remainder or has a
/// negative coefficient.
PoincarePolynomial poincare_polynomial(const WeightSystem& ws);

/// prod (d - a_i)/a_i by the closed formula; NonIntegerMilnorNumber otherwise.
BigInt milnor_number(const WeightSystem& ws);

/// Spectral number (m + sum a_i)/d with multiplicity coeffs[m].
Spectrum spectrum(const WeightSystem& ws);
Spectrum spectrum(const WeightSystem& ws, const PoincarePolynomial& p);

/// s_p = dim Gr^p_F H^n(M), p = 0..n: the multiplicity of spectral numbers in
/// the half-open interval (n-p, n-p+1].
std::vector<BigInt> s_vector(const Spectrum& sp);
std::vector<BigInt> s_vector(const WeightSystem& ws);

}  // namespace liminal

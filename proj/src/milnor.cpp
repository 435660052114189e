// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/milnor.hpp"

#include <algorithm>

#include "liminal/classify.hpp"
#include "liminal/errors.hpp"
#include "liminal/poly.hpp"

namespace liminal {

BigInt PoincarePolynomial::milnor_number() const {
  BigInt mu = 0;
  for (const auto& c : coeffs) mu += c;
  return mu;
}

bool PoincarePolynomial::palindromic() const {
  return std::equal(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(coeffs.size() / 2),
                    coeffs.rbegin());
}

BigInt Spectrum::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

bool Spectrum::symmetric() const {
  const Rational mirror(dim + 1);
  const std::size_t k = entries.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& lo = entries[i];
    const auto& hi = entries[k - 1 - i];
    if (lo.value + hi.value != mirror || lo.multiplicity != hi.multiplicity) return false;
  }
  return true;
}

PoincarePolynomial poincare_polynomial(const WeightSystem& ws) {
  auto coeffs = poly::graded_quotient(ws.weights(), ws.degree());
  if (!coeffs) {
    throw NonPolynomialQuotient("prod (t^(d-a_i) - 1)/(t^(a_i) - 1) leaves a remainder for " +
                                ws.to_string());
  }
  for (const auto& c : *coeffs) {
    if (c < 0) {
      throw NonPolynomialQuotient("graded quotient has a negative coefficient for " +
                                  ws.to_string());
    }
  }
  return PoincarePolynomial{std::move(*coeffs)};
}

BigInt milnor_number(const WeightSystem& ws) {
  Rational mu(1);
  for (const auto a : ws.weights()) mu *= Rational(BigInt(ws.degree() - a), BigInt(a));
  if (denominator(mu) != 1) {
    throw NonIntegerMilnorNumber("prod (d - a_i)/a_i = " + mu.str() + " for " + ws.to_string());
  }
  return numerator(mu);
}

Spectrum spectrum(const WeightSystem& ws, const PoincarePolynomial& p) {
  Spectrum sp;
  sp.dim = ws.dim();
  for (std::size_t m = 0; m < p.coeffs.size(); ++m) {
    if (p.coeffs[m] == 0) continue;
    sp.entries.push_back(
        {Rational(BigInt(static_cast<std::int64_t>(m) + ws.weight_sum()), BigInt(ws.degree())),
         p.coeffs[m]});
  }
  return sp;
}

Spectrum spectrum(const WeightSystem& ws) { return spectrum(ws, poincare_polynomial(ws)); }

std::vector<BigInt> s_vector(const Spectrum& sp) {
  std::vector<BigInt> s(static_cast<std::size_t>(sp.dim) + 1);
  for (const auto& e : sp.entries) {
    // l in (n-p, n-p+1]  <=>  p = n + 1 - ceil(l).
    const BigInt p = BigInt(sp.dim + 1) - ceil(e.value);
    if (p < 0 || p > sp.dim) continue;
    s[static_cast<std::size_t>(p)] += e.multiplicity;
  }
  return s;
}

std::vector<BigInt> s_vector(const WeightSystem& ws) { return s_vector(spectrum(ws)); }

}  // namespace liminal

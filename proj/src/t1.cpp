// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/t1.hpp"

#include "liminal/classify.hpp"
#include "liminal/errors.hpp"

namespace liminal {

BigInt T1Decomposition::at(std::int64_t weight) const {
  const auto it = by_weight.find(weight);
  return it == by_weight.end() ? BigInt(0) : it->second;
}

BigInt T1Decomposition::total() const {
  BigInt sum = 0;
  for (const auto& [w, dim] : by_weight) sum += dim;
  return sum;
}

std::int64_t weight_of_monomial(const WeightSystem& ws, std::span<const std::int64_t> alpha) {
  const auto& weights = ws.input_weights();
  if (alpha.size() != weights.size()) {
    throw InvalidArgument("exponent vector has " + std::to_string(alpha.size()) +
                          " entries, expected " + std::to_string(weights.size()));
  }
  std::int64_t w = -ws.degree();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw InvalidArgument("negative exponent in monomial");
    w += alpha[i] * weights[i];
  }
  return w;
}

T1Decomposition t1_decomposition(const WeightSystem& ws, const PoincarePolynomial& p) {
  T1Decomposition t1;
  const auto d = ws.degree();
  for (std::size_t m = 0; m < p.coeffs.size(); ++m) {
    if (p.coeffs[m] == 0) continue;
    const auto weight = static_cast<std::int64_t>(m) - d;
    t1.by_weight.emplace(weight, p.coeffs[m]);
    if (weight < 0) {
      t1.dim_K_prime += p.coeffs[m];
    } else if (weight == 0) {
      t1.gr_hn_link += p.coeffs[m];
    } else {
      t1.im_h1_log_minus_E += p.coeffs[m];
    }
  }
  t1.dim_K = t1.dim_K_prime + t1.gr_hn_link;
  t1.h1_log = t1.gr_hn_link + t1.im_h1_log_minus_E;
  t1.labels_valid = liminal_defect(ws) == 0;
  return t1;
}

T1Decomposition t1_decomposition(const WeightSystem& ws) {
  return t1_decomposition(ws, poincare_polynomial(ws));
}

BigInt t_minus(const WeightSystem& ws) { return t1_decomposition(ws).dim_K_prime; }

}  // namespace liminal

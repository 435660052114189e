// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/poly.hpp"

#include <string>

#include "liminal/errors.hpp"

namespace liminal::poly {

void trim(Coefficients& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void multiply_by_binomial(Coefficients& p, std::size_t e) {
  const std::size_t old_size = p.size();
  p.resize(old_size + e);
  for (std::size_t i = old_size + e; i-- > e;) p[i] = p[i - e] - (i < old_size ? p[i] : BigInt(0));
  for (std::size_t i = 0; i < e && i < old_size; ++i) p[i] = -p[i];
}

bool divide_by_binomial(Coefficients& p, std::size_t e) {
  trim(p);
  if (e == 0) return false;
  if (p.empty()) return true;
  if (p.size() <= e) return false;
  // p = q * (t^e - 1)  <=>  p[j] = q[j-e] - q[j], so q[j-e] = p[j] + q[j] from the top down.
  const std::size_t q_size = p.size() - e;
  Coefficients q(q_size);
  for (std::size_t j = p.size(); j-- > e;) {
    q[j - e] = p[j] + (j < q_size ? q[j] : BigInt(0));
  }
  for (std::size_t j = 0; j < e; ++j) {
    if (p[j] + (j < q_size ? q[j] : BigInt(0)) != 0) return false;
  }
  p = std::move(q);
  return true;
}

std::optional<Coefficients> graded_quotient(std::span<const std::int64_t> weights,
                                            std::int64_t degree) {
  std::int64_t numerator_degree = 0;
  for (const auto a : weights) numerator_degree += degree - a;
  if (numerator_degree > kMaxDegree) {
    throw DegreeTooLarge("graded computation needs " + std::to_string(numerator_degree) +
                         " coefficients, cap is " + std::to_string(kMaxDegree));
  }
  Coefficients p{BigInt(1)};
  p.reserve(static_cast<std::size_t>(numerator_degree) + 1);
  for (const auto a : weights) multiply_by_binomial(p, static_cast<std::size_t>(degree - a));
  for (const auto a : weights) {
    if (!divide_by_binomial(p, static_cast<std::size_t>(a))) return std::nullopt;
  }
  return p;
}

}  // namespace liminal::poly

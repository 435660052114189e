// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/classify.hpp"

#include <algorithm>

namespace liminal {

std::int64_t liminal_defect(const WeightSystem& ws) { return ws.weight_sum() - ws.degree(); }

Rational minimal_exponent(const WeightSystem& ws) {
  return Rational(BigInt(ws.weight_sum()), BigInt(ws.degree()));
}

std::string SingularityClass::label() const {
  if (liminal_level) return std::to_string(*liminal_level) + "-liminal";
  if (max_rational >= 0) return std::to_string(max_rational) + "-rational";
  return "not Du Bois";
}

SingularityClass classify(const WeightSystem& ws) {
  const Rational alpha = minimal_exponent(ws);
  SingularityClass c;
  c.log_canonical = alpha >= 1;
  c.rational = alpha > 1;
  c.zero_liminal = alpha == 1;
  // k-Du Bois iff k + 1 <= alpha; k-rational iff k + 1 < alpha.
  c.max_du_bois = std::max(-1, static_cast<int>(floor(alpha)) - 1);
  c.max_rational = std::max(-1, static_cast<int>(ceil(alpha)) - 2);
  if (denominator(alpha) == 1) c.liminal_level = static_cast<int>(numerator(alpha)) - 1;
  return c;
}

}  // namespace liminal

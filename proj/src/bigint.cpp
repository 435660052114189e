// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/bigint.hpp"

namespace liminal {

BigInt floor(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt f = floor(r);
  if (Rational(f) != r) ++f;
  return f;
}

}  // namespace liminal

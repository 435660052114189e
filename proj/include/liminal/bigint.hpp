// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace liminal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// floor and ceiling of an exact rational.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

}  // namespace liminal

// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liminal/bigint.hpp"

// Dense univariate integer polynomials, coefficient i at index i.
namespace liminal::poly {

using Coefficients = std::vector<BigInt>;

/// Largest numerator degree sum(d - a_i) accepted by graded_quotient().
inline constexpr std::int64_t kMaxDegree = std::int64_t{1} << 22;

/// p <- p * (t^e - 1).
void multiply_by_binomial(Coefficients& p, std::size_t e);

/// p <- p / (t^e - 1) when the division is exact; returns false (p unspecified)
/// on a nonzero remainder.
bool divide_by_binomial(Coefficients& p, std::size_t e);

/// Drops trailing zero coefficients.
void trim(Coefficients& p);

/// prod_i (t^(d - a_i) - 1) / (t^(a_i) - 1), numerators multiplied first and
/// denominators divided out one at a time. nullopt on the first nonzero
/// remainder. Requires 0 < a_i < d; throws DegreeTooLarge past kMaxDegree.
std::optional<Coefficients> graded_quotient(std::span<const std::int64_t> weights,
                                            std::int64_t degree);

}  // namespace liminal::poly

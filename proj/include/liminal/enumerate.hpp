// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "liminal/weight_system.hpp"

namespace liminal {

/// Exponents of a diagonal equation z_1^{p_1} + ... + z_{n+1}^{p_{n+1}} with
/// sum 1/p_i = 1, stored non-decreasing.
struct DiagonalFamily {
  std::vector<std::int64_t> exponents;

  /// a_i = L/p_i, d = L with L = lcm(p_i).
  WeightSystem weight_system() const;
  int dim() const noexcept { return static_cast<int>(exponents.size()) - 1; }

  friend auto operator<=>(const DiagonalFamily&, const DiagonalFamily&) = default;
};

struct EnumerationOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
};

/// Node budget from LIMINAL_NODE_BUDGET, else the default. Throws InvalidArgument on a malformed value.
EnumerationOptions enumeration_options_from_env();

/// Every non-decreasing (p_1..p_{n+1}), p_i >= 2, with sum 1/p_i = 1, sorted
/// lexicographically. Throws InvalidArgument for dim < 1 and DimensionTooLarge
/// once more than node_budget search nodes have been visited.
std::vector<DiagonalFamily> enumerate_diagonal_liminal(int dim,
                                                       const EnumerationOptions& options = {},
                                                       EnumerationStats* stats = nullptr);

}  // namespace liminal

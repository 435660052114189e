// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "liminal/bigint.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

/// N = sum a_i - d. Zero exactly for 0-liminal systems.
std::int64_t liminal_defect(const WeightSystem& ws);

/// sum a_i / d, reduced.
Rational minimal_exponent(const WeightSystem& ws);

struct SingularityClass {
  bool log_canonical = false;
  bool zero_liminal = false;
  bool rational = false;
  /// Largest k with k-Du Bois; -1 when not Du Bois.
  int max_du_bois = -1;
  /// Largest k with k-rational; -1 when not rational.
  int max_rational = -1;
  /// k when the singularity is k-Du Bois but not k-rational.
  std::optional<int> liminal_level;

  /// "0-liminal", "2-liminal", "1-rational", "not Du Bois", ...
  std::string label() const;

  friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

/// Minimal-exponent thresholds: k-Du Bois iff alpha >= k+1, k-rational iff alpha > k+1.
SingularityClass classify(const WeightSystem& ws);

}  // namespace liminal

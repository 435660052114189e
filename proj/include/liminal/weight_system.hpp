// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace liminal {

/// C*-weights (a_1..a_{n+1}) and weighted degree d of a quasi-homogeneous
/// hypersurface germ in C^{n+1}.
///
/// Inputs are reduced by g = gcd(a_1, .., a_{n+1}, d) on construction; every
/// accessor returns the reduced data, so (2,2,2,2;8) and (1,1,1,1;4) compare
/// equal and yield identical invariants. Construction enforces
///
///   * at least two variables and d >= 2,
///   * 0 < a_i < d,
///   * the normalization 2*a_i <= d.
///
/// A system violating only the normalization raises NonPolynomialQuotient
/// when no isolated singularity carries those weights at all, and
/// NormalizationViolation otherwise (the germ splits off a quadratic term).
class WeightSystem {
 public:
  WeightSystem(std::vector<std::int64_t> weights, std::int64_t degree);

  /// Parses "a1,a2,...,ak;d". Whitespace around tokens is ignored.
  static WeightSystem parse(std::string_view text);
  /// Parses {"weights": [...], "degree": d}.
  static WeightSystem from_json(const nlohmann::json& j);

  /// Reduced weights, sorted non-decreasing.
  const std::vector<std::int64_t>& weights() const noexcept { return sorted_; }
  /// Reduced weights in the order they were supplied.
  const std::vector<std::int64_t>& input_weights() const noexcept { return input_order_; }
  std::int64_t degree() const noexcept { return degree_; }
  /// The common factor removed from the raw input.
  std::int64_t scale() const noexcept { return scale_; }

  std::size_t ambient_vars() const noexcept { return sorted_.size(); }
  int dim() const noexcept { return static_cast<int>(sorted_.size()) - 1; }
  std::int64_t weight_sum() const noexcept { return weight_sum_; }

  /// "a1,...,ak;d" in input order, reduced.
  std::string to_string() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) noexcept {
    return a.degree_ == b.degree_ && a.sorted_ == b.sorted_;
  }

 private:
  std::vector<std::int64_t> sorted_;
  std::vector<std::int64_t> input_order_;
  std::int64_t degree_ = 0;
  std::int64_t scale_ = 1;
  std::int64_t weight_sum_ = 0;
};

}  // namespace liminal

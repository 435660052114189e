// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "liminal/bigint.hpp"
#include "liminal/milnor.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

/// C*-weight decomposition of H^0(X; T^1_X) for a quasi-homogeneous
/// hypersurface. The monomial z^alpha of the Milnor algebra sits in weight
/// sum alpha_i a_i - d; only nonzero weight spaces are stored.
///
/// For 0-liminal systems the partial sums are the dimensions of
///   dim_K_prime         K' = H^2_E(Omega^{n-1}(log E)) = t_- = b^{1,n-2}   (a < 0)
///   gr_hn_link          Gr^{n-1}_F H^n(L)                              (a = 0)
///   dim_K               K                                              (a <= 0)
///   im_h1_log_minus_E   image of H^1(Omega^{n-1}(log E)(-E))           (a > 0)
///   h1_log              H^1(Omega^{n-1}(log E))                        (a >= 0)
/// labels_valid records whether that reading applies (liminal defect 0).
struct T1Decomposition {
  std::map<std::int64_t, BigInt> by_weight;
  BigInt h1_log;
  BigInt gr_hn_link;
  BigInt im_h1_log_minus_E;
  BigInt dim_K;
  BigInt dim_K_prime;
  bool labels_valid = false;

  const BigInt& t_minus() const noexcept { return dim_K_prime; }
  /// dim of the weight-a piece, zero when absent.
  BigInt at(std::int64_t weight) const;
  BigInt total() const;
};

/// sum alpha_i a_i - d, alpha indexed in the input order of the variables.
/// Throws InvalidArgument on a length mismatch or a negative exponent.
std::int64_t weight_of_monomial(const WeightSystem& ws, std::span<const std::int64_t> alpha);

T1Decomposition t1_decomposition(const WeightSystem& ws);
T1Decomposition t1_decomposition(const WeightSystem& ws, const PoincarePolynomial& p);

/// Dimension of the negative weight space.
BigInt t_minus(const WeightSystem& ws);

}  // namespace liminal

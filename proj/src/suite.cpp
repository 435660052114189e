// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/suite.hpp"

#include <string>

#include "liminal/errors.hpp"
#include "liminal/t1.hpp"
#include "liminal/weight_system.hpp"

namespace liminal::suite {

namespace {

void require_n(int n, int min_n) {
  if (n < min_n) {
    throw InvalidArgument("n must be at least " + std::to_string(min_n) + ", got " +
                          std::to_string(n));
  }
}

BigInt sq(int x) { return BigInt(x) * x; }

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i)
  }
  return result;
}

BigInt global_t1_dim(int n) {
  require_n(n, 3);
  const auto u = static_cast<unsigned>(n);
  return binomial(2 * u + 3, u + 2) - sq(n + 2);
}

BigInt dim_A_system(int n) {
  require_n(n, 3);
  const auto u = static_cast<unsigned>(n);
  return binomial(2 * u + 2, u) - (n + 1) - 1;
}

BigInt moduli_E_dim(int n) {
  require_n(n, 3);
  const auto u = static_cast<unsigned>(n);
  return binomial(2 * u + 1, u + 1) - sq(n + 1);
}

BigInt t_minus_formula(int n) {
  require_n(n, 3);
  const auto u = static_cast<unsigned>(n);
  return binomial(2 * u + 1, u) - (n + 1);
}

IdentityWitness verify_identity(int n) {
  IdentityWitness w;
  w.dim_A = dim_A_system(n);
  w.moduli_E = moduli_E_dim(n);
  w.t_minus = t_minus_formula(n);
  w.global_t1 = global_t1_dim(n);
  w.holds = w.dim_A + w.moduli_E + w.t_minus == w.global_t1;
  const WeightSystem fermat(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1), n + 1);
  w.fermat_t_minus_matches = liminal::t_minus(fermat) == w.t_minus;
  return w;
}

BigInt bounded_composition_count(unsigned vars, unsigned bound, unsigned total) {
  // Solutions of sum alpha <= total in `vars` non-negative integers number
  // C(total + vars, vars); subtract those with some alpha_i > bound.
  BigInt count = 0;
  const BigInt step = BigInt(bound) + 1;
  for (unsigned j = 0; j <= vars; ++j) {
    const BigInt rest = BigInt(total) - step * j;
    if (rest < 0) break;
    const BigInt term =
        binomial(vars, j) * binomial(static_cast<unsigned>(rest) + vars, vars);
    if (j % 2 == 0) {
      count += term;
    } else {
      count -= term;
    }
  }
  return count;
}

LocalImageDims local_image_dims(int n) {
  require_n(n, 2);
  const auto u = static_cast<unsigned>(n);
  LocalImageDims dims;
  dims.full = boost::multiprecision::pow(BigInt(n), u + 1);
  dims.image = bounded_composition_count(u + 1, u - 1, u + 2);
  dims.codim = dims.full - dims.image;
  return dims;
}

std::vector<Degree5SeriesReport> series_report(int n_min, int n_max, int n_cap) {
  if (n_min < 3 || n_min > n_max || n_max > n_cap) {
    throw InvalidArgument("series range must satisfy 3 <= n_min <= n_max <= " +
                          std::to_string(n_cap) + ", got " + std::to_string(n_min) + ".." +
                          std::to_string(n_max));
  }
  std::vector<Degree5SeriesReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    const auto witness = verify_identity(n);
    const auto local = local_image_dims(n);
    Degree5SeriesReport r;
    r.n = n;
    r.global_t1 = witness.global_t1;
    r.dim_A_system = witness.dim_A;
    r.moduli_E = witness.moduli_E;
    r.pair_moduli = witness.dim_A + witness.moduli_E;
    r.t_minus = witness.t_minus;
    r.identity_holds = r.pair_moduli + r.t_minus == r.global_t1;
    r.fermat_t_minus_matches = witness.fermat_t_minus_matches;
    r.special_case = n == 3;
    r.local_full = local.full;
    r.local_image = local.image;
    r.local_codim = local.codim;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace liminal::suite

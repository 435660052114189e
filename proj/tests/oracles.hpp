// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations. Nothing here calls into the library's
// algorithms; each routine enumerates or eliminates directly.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t lcm_of(const std::vector<std::int64_t>& ps) {
  std::int64_t l = 1;
  for (const auto p : ps) l = std::lcm(l, p);
  return l;
}

// Calls f(alpha) for every alpha with 0 <= alpha_i <= bounds[i].
template <typename F>
void for_each_in_box(const std::vector<std::int64_t>& bounds, F&& f) {
  std::vector<std::int64_t> alpha(bounds.size(), 0);
  while (true) {
    f(alpha);
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == bounds[i]) alpha[i++] = 0;
    if (i == alpha.size()) return;
    ++alpha[i];
  }
}

// Graded dimensions of C[z]/(z_1^{p_1-1}, ..., z_k^{p_k-1}) with z_i in degree
// L/p_i: the Milnor algebra of the diagonal polynomial sum z_i^{p_i}.
inline std::vector<std::int64_t> diagonal_graded_dims(const std::vector<std::int64_t>& exps) {
  const auto L = lcm_of(exps);
  std::vector<std::int64_t> bounds, weights;
  for (const auto p : exps) {
    bounds.push_back(p - 2);
    weights.push_back(L / p);
  }
  std::vector<std::int64_t> dims;
  for_each_in_box(bounds, [&](const std::vector<std::int64_t>& alpha) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) deg += alpha[i] * weights[i];
    if (static_cast<std::size_t>(deg) >= dims.size()) dims.resize(static_cast<std::size_t>(deg) + 1, 0);
    ++dims[static_cast<std::size_t>(deg)];
  });
  return dims;
}

// Spectrum of sum z_i^{p_i} over the common denominator L = lcm(p_i):
// counts[k] is the multiplicity of k/L in { sum (alpha_i + 1)/p_i }.
inline std::vector<std::int64_t> diagonal_spectrum_scaled(const std::vector<std::int64_t>& exps) {
  const auto L = lcm_of(exps);
  std::vector<std::int64_t> bounds;
  std::int64_t top = 0;
  for (const auto p : exps) {
    bounds.push_back(p - 2);
    top += (p - 1) * (L / p);
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
  for_each_in_box(bounds, [&](const std::vector<std::int64_t>& alpha) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) k += (alpha[i] + 1) * (L / exps[i]);
    ++counts[static_cast<std::size_t>(k)];
  });
  return counts;
}

inline std::map<Rational, std::int64_t> diagonal_spectrum(const std::vector<std::int64_t>& exps) {
  const auto L = lcm_of(exps);
  const auto counts = diagonal_spectrum_scaled(exps);
  std::map<Rational, std::int64_t> sp;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) sp[Rational(static_cast<std::int64_t>(k), L)] = counts[k];
  }
  return sp;
}

// s_p by counting spectral numbers against (n-p, n-p+1] one interval at a time.
inline std::vector<std::int64_t> s_by_intervals(const std::map<Rational, std::int64_t>& sp, int n) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p <= n; ++p) {
    const Rational lo = n - p;
    const Rational hi = n - p + 1;
    for (const auto& [l, mult] : sp) {
      if (l > lo && l <= hi) s[static_cast<std::size_t>(p)] += mult;
    }
  }
  return s;
}

// Same intervals for a spectrum given as counts over the denominator L.
inline std::vector<std::int64_t> s_by_intervals(const std::vector<std::int64_t>& counts, std::int64_t L, int n) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p <= n; ++p) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const auto num = static_cast<std::int64_t>(k);
      if (num > (n - p) * L && num <= (n - p + 1) * L) s[static_cast<std::size_t>(p)] += counts[k];
    }
  }
  return s;
}

// Non-decreasing tuples of length len with entries in [2, pmax] and sum 1/p_i = 1.
inline std::vector<std::vector<std::int64_t>> egyptian_scan(int len, std::int64_t pmax) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t lo) -> void {
    if (static_cast<int>(cur.size()) == len) {
      Rational sum = 0;
      for (const auto p : cur) sum += Rational(1, p);
      if (sum == 1) out.push_back(cur);
      return;
    }
    for (std::int64_t p = lo; p <= pmax; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

inline BigInt pascal_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// #{alpha in {0..bound}^vars : sum alpha <= total} by walking the box.
inline std::int64_t box_count_enumerated(int vars, std::int64_t bound, std::int64_t total) {
  std::int64_t count = 0;
  for_each_in_box(std::vector<std::int64_t>(static_cast<std::size_t>(vars), bound),
                  [&](const std::vector<std::int64_t>& alpha) {
                    if (std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0}) <= total) ++count;
                  });
  return count;
}

// Same count as a partial coefficient sum of (1 + t + ... + t^bound)^vars.
inline BigInt box_count_product(int vars, std::int64_t bound, std::int64_t total) {
  std::vector<BigInt> poly{1};
  for (int v = 0; v < vars; ++v) {
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(bound), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::int64_t j = 0; j <= bound; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = std::move(next);
  }
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= total && i < static_cast<std::int64_t>(poly.size()); ++i) {
    sum += poly[static_cast<std::size_t>(i)];
  }
  return sum;
}

// Rank over Q by textbook Gauss-Jordan on exact rationals.
inline std::int64_t rational_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace oracle

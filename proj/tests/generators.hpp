// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

// Fixed-seed generators of weight systems and simplicial complexes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liminal/dual_complex.hpp"
#include "liminal/weight_system.hpp"

namespace gen {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kSeed = 0x5eed'11aa'2024'0001ULL;

// Rational weights of a Thom-Sebastiani sum of Fermat (z^p), chain
// (z1^p z2 + z2^q) and loop (z1^p z2 + z2^q z1) blocks. Each block is an
// isolated quasi-homogeneous singularity, so the sum is one too.
inline std::vector<Rational> block_weights(std::mt19937_64& rng, int vars, int max_exp) {
  std::uniform_int_distribution<int> exp(2, max_exp);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<Rational> w;
  while (static_cast<int>(w.size()) < vars) {
    const int left = vars - static_cast<int>(w.size());
    const int k = left >= 2 ? kind(rng) : 0;
    const int p = exp(rng), q = exp(rng);
    if (k == 0) {
      w.emplace_back(1, p);
    } else if (k == 1) {
      w.emplace_back(q - 1, p * q);
      w.emplace_back(1, q);
    } else {
      w.emplace_back(q - 1, p * q - 1);
      w.emplace_back(p - 1, p * q - 1);
    }
  }
  return w;
}

inline liminal::WeightSystem to_system(const std::vector<Rational>& w) {
  boost::multiprecision::cpp_int d = 1;
  for (const auto& x : w) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(x));
  std::vector<std::int64_t> a;
  for (const auto& x : w) {
    a.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(x) * (d / boost::multiprecision::denominator(x))));
  }
  return liminal::WeightSystem(std::move(a), static_cast<std::int64_t>(d));
}

// Random isolated systems with 2..max_vars variables and bounded Milnor number.
inline std::vector<liminal::WeightSystem> random_isolated_systems(std::size_t count, int max_vars = 5,
                                                                  int max_exp = 7,
                                                                  std::uint64_t seed = kSeed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vars(2, max_vars);
  std::vector<liminal::WeightSystem> out;
  while (out.size() < count) {
    auto w = block_weights(rng, vars(rng), max_exp);
    std::shuffle(w.begin(), w.end(), rng);
    out.push_back(to_system(w));
  }
  return out;
}

// Every 0-liminal block-sum system with 3..5 variables and exponents <= max_exp,
// deduplicated up to reduction and variable order, in a fixed order.
inline std::vector<liminal::WeightSystem> zero_liminal_block_systems(int max_exp = 7) {
  std::vector<std::vector<Rational>> blocks;  // each block's weights
  for (int p = 2; p <= max_exp; ++p) {
    blocks.push_back({Rational(1, p)});
    for (int q = 2; q <= max_exp; ++q) {
      blocks.push_back({Rational(q - 1, p * q), Rational(1, q)});
      if (p <= q) blocks.push_back({Rational(q - 1, p * q - 1), Rational(p - 1, p * q - 1)});
    }
  }
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  std::vector<liminal::WeightSystem> out;
  std::vector<Rational> cur;
  auto rec = [&](auto&& self, std::size_t first, Rational sum) -> void {
    if (sum > 1 || cur.size() > 5) return;
    if (sum == 1) {
      if (cur.size() >= 3) {
        const auto ws = to_system(cur);
        if (seen.insert({ws.weights(), ws.degree()}).second) out.push_back(ws);
      }
      return;
    }
    for (std::size_t b = first; b < blocks.size(); ++b) {
      Rational add = 0;
      for (const auto& x : blocks[b]) add += x;
      for (const auto& x : blocks[b]) cur.push_back(x);
      self(self, b, sum + add);
      cur.resize(cur.size() - blocks[b].size());
    }
  };
  rec(rec, 0, Rational(0));
  return out;
}

// Random downward-closed complex on `vertices` vertices with faces of at most max_size vertices.
inline liminal::SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int max_size) {
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<int> size(2, max_size);
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  std::vector<liminal::Face> generators;
  const int count = std::uniform_int_distribution<int>(0, 2 * vertices)(rng);
  for (int g = 0; g < count; ++g) {
    std::set<int> f;
    const int s = std::min(size(rng), vertices);
    while (static_cast<int>(f.size()) < s) f.insert(vertex(rng));
    if (keep(rng)) generators.emplace_back(f.begin(), f.end());
  }
  return liminal::SimplicialComplex::closure(vertices, generators);
}

}  // namespace gen

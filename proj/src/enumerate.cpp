// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/enumerate.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numeric>
#include <string>

#include "liminal/bigint.hpp"
#include "liminal/errors.hpp"

namespace liminal {

WeightSystem DiagonalFamily::weight_system() const {
  BigInt lcm = 1;
  for (const auto p : exponents) lcm = boost::multiprecision::lcm(lcm, BigInt(p));
  if (lcm > std::numeric_limits<std::int32_t>::max()) {
    throw DegreeTooLarge("lcm of exponents is " + lcm.str());
  }
  const auto degree = static_cast<std::int64_t>(lcm);
  std::vector<std::int64_t> weights;
  weights.reserve(exponents.size());
  for (const auto p : exponents) weights.push_back(degree / p);
  return WeightSystem(std::move(weights), degree);
}

EnumerationOptions enumeration_options_from_env() {
  EnumerationOptions options;
  if (const char* raw = std::getenv("LIMINAL_NODE_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
      throw InvalidArgument(std::string("LIMINAL_NODE_BUDGET must be a positive integer, got '") + raw + "'");
    }
    options.node_budget = value;
  }
  return options;
}

namespace {

class Search {
 public:
  Search(std::uint64_t budget, std::vector<DiagonalFamily>& out) : budget_(budget), out_(out) {}

  // Fills the remaining `slots` positions with exponents >= min_p whose
  // reciprocals sum to `target`.
  void run(const Rational& target, int slots, const BigInt& min_p) {
    if (++nodes_ > budget_) {
      throw DimensionTooLarge("diagonal enumeration exceeded the node budget of " +
                              std::to_string(budget_));
    }
    if (slots == 1) {
      if (numerator(target) == 1 && denominator(target) >= min_p) {
        push(denominator(target));
        out_.push_back(DiagonalFamily{current_});
        current_.pop_back();
      }
      return;
    }
    // 1/p < target (later slots still need a positive share) and
    // slots/p >= target (p is the smallest remaining exponent).
    BigInt lo = numerator(target) == 0 ? min_p : floor(Rational(1) / target) + 1;
    if (lo < min_p) lo = min_p;
    const BigInt hi = floor(Rational(slots) / target);
    for (BigInt p = lo; p <= hi; ++p) {
      push(p);
      run(target - Rational(BigInt(1), p), slots - 1, p);
      current_.pop_back();
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void push(const BigInt& p) {
    if (p > std::numeric_limits<std::int64_t>::max()) {
      throw DimensionTooLarge("exponent " + p.str() + " does not fit in 64 bits");
    }
    current_.push_back(static_cast<std::int64_t>(p));
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> current_;
  std::vector<DiagonalFamily>& out_;
};

}  // namespace

std::vector<DiagonalFamily> enumerate_diagonal_liminal(int dim, const EnumerationOptions& options,
                                                       EnumerationStats* stats) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1, got " + std::to_string(dim));
  std::vector<DiagonalFamily> families;
  Search search(options.node_budget, families);
  search.run(Rational(1), dim + 1, BigInt(2));
  if (stats) stats->nodes = search.nodes();
  // Depth-first with increasing exponents already yields lexicographic order.
  return families;
}

}  // namespace liminal

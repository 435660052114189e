// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/weight_system.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liminal/errors.hpp"
#include "liminal/poly.hpp"

namespace liminal {

namespace {

constexpr std::int64_t kMaxWeightDegree = std::int64_t{1} << 31;
constexpr std::size_t kMaxVars = 4096;

std::string join(const std::vector<std::int64_t>& weights, std::int64_t degree) {
  std::ostringstream os;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != 0) os << ',';
    os << weights[i];
  }
  os << ';' << degree;
  return os.str();
}

std::string_view strip(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view token, std::string_view text) {
  token = strip(token);
  std::int64_t value = 0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("malformed integer '" + std::string(token) + "' in weight system '" +
                     std::string(text) + "'");
  }
  return value;
}

}  // namespace

WeightSystem::WeightSystem(std::vector<std::int64_t> weights, std::int64_t degree) {
  if (weights.size() < 2) {
    throw InvalidWeightSystem("a weight system needs at least two variables, got " +
                              std::to_string(weights.size()));
  }
  if (weights.size() > kMaxVars) {
    throw InvalidWeightSystem("too many variables: " + std::to_string(weights.size()));
  }
  if (degree < 2) {
    throw InvalidWeightSystem("degree must be at least 2, got " + std::to_string(degree));
  }
  if (degree > kMaxWeightDegree) {
    throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds 2^31");
  }
  for (const auto a : weights) {
    if (a <= 0 || a >= degree) {
      throw InvalidWeightSystem("weights must satisfy 0 < a_i < d; got a_i = " +
                                std::to_string(a) + " with d = " + std::to_string(degree) +
                                " in " + join(weights, degree));
    }
  }

  std::int64_t g = degree;
  for (const auto a : weights) g = std::gcd(g, a);
  for (auto& a : weights) a /= g;
  degree /= g;

  input_order_ = weights;
  sorted_ = std::move(weights);
  std::sort(sorted_.begin(), sorted_.end());
  degree_ = degree;
  scale_ = g;
  weight_sum_ = std::accumulate(sorted_.begin(), sorted_.end(), std::int64_t{0});

  if (2 * sorted_.back() > degree_) {
    // Only a germ with a splitting quadratic term can carry such a weight;
    // without one, no isolated singularity has these weights at all.
    if (!poly::graded_quotient(sorted_, degree_)) {
      throw NonPolynomialQuotient("prod (t^(d-a_i) - 1)/(t^(a_i) - 1) is not a polynomial for " +
                                  to_string());
    }
    throw NormalizationViolation("weights must satisfy 2*a_i <= d; got a_i = " +
                                 std::to_string(sorted_.back()) + " in " + to_string());
  }
}

WeightSystem WeightSystem::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("expected 'a1,a2,...,ak;d', got '" + std::string(text) + "'");
  }
  std::vector<std::int64_t> weights;
  std::string_view rest = text.substr(0, semi);
  while (true) {
    const auto comma = rest.find(',');
    weights.push_back(parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return WeightSystem(std::move(weights), parse_int(text.substr(semi + 1), text));
}

WeightSystem WeightSystem::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("degree")) {
    throw ParseError("weight system object needs \"weights\" and \"degree\": " + j.dump());
  }
  const auto& w = j.at("weights");
  const auto& d = j.at("degree");
  if (!w.is_array() || !d.is_number_integer()) {
    throw ParseError("\"weights\" must be an array and \"degree\" an integer: " + j.dump());
  }
  std::vector<std::int64_t> weights;
  for (const auto& a : w) {
    if (!a.is_number_integer()) throw ParseError("non-integer weight in " + j.dump());
    weights.push_back(a.get<std::int64_t>());
  }
  return WeightSystem(std::move(weights), d.get<std::int64_t>());
}

std::string WeightSystem::to_string() const { return join(input_order_, degree_); }

}  // namespace liminal

// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "generators.hpp"
#include "liminal/classify.hpp"
#include "liminal/errors.hpp"
#include "liminal/weight_system.hpp"

using liminal::Rational;
using liminal::WeightSystem;

TEST_SUITE("core") {
  TEST_CASE("weight system validation and reduction") {
    const WeightSystem ws({4, 1, 2, 1}, 8);
    CHECK(ws.weights() == std::vector<std::int64_t>{1, 1, 2, 4});
    CHECK(ws.input_weights() == std::vector<std::int64_t>{4, 1, 2, 1});
    CHECK(ws.to_string() == "4,1,2,1;8");
    CHECK(ws.dim() == 3);
    CHECK(ws.ambient_vars() == 4);

    const WeightSystem scaled({2, 2, 2, 2}, 8);
    CHECK(scaled == WeightSystem({1, 1, 1, 1}, 4));
    CHECK(scaled.scale() == 2);
    CHECK(scaled.degree() == 4);

    CHECK_THROWS_AS(WeightSystem({1}, 2), liminal::InvalidWeightSystem);
    CHECK_THROWS_AS(WeightSystem({1, 1}, 1), liminal::InvalidWeightSystem);
    CHECK_THROWS_AS(WeightSystem({0, 1}, 4), liminal::InvalidWeightSystem);
    CHECK_THROWS_AS(WeightSystem({-1, 1}, 4), liminal::InvalidWeightSystem);
    CHECK_THROWS_AS(WeightSystem({4, 1}, 4), liminal::InvalidWeightSystem);
  }

  TEST_CASE("normalization 2 a_i <= d") {
    // z1 z2 + z1^4 carries weights (1,3;4): a genuine Morse point, but not normalized.
    CHECK_THROWS_AS(WeightSystem({1, 3}, 4), liminal::NormalizationViolation);
    // No isolated singularity has weights (2,5;6).
    CHECK_THROWS_AS(WeightSystem({2, 5}, 6), liminal::NonPolynomialQuotient);
    CHECK_NOTHROW(WeightSystem({2, 3}, 6));
  }

  TEST_CASE("text and JSON parsing") {
    CHECK(WeightSystem::parse("1,1,2,4;8") == WeightSystem({1, 1, 2, 4}, 8));
    CHECK(WeightSystem::parse(" 1, 1 ,1 ; 3 ") == WeightSystem({1, 1, 1}, 3));
    CHECK_THROWS_AS(WeightSystem::parse("1,1,1"), liminal::ParseError);
    CHECK_THROWS_AS(WeightSystem::parse("1,x;3"), liminal::ParseError);
    CHECK_THROWS_AS(WeightSystem::parse("1,,1;3"), liminal::ParseError);
    CHECK_THROWS_AS(WeightSystem::parse("1,1;3;4"), liminal::ParseError);

    const auto j = nlohmann::json::parse(R"({"weights":[1,1,1,1],"degree":4})");
    CHECK(WeightSystem::from_json(j) == WeightSystem({1, 1, 1, 1}, 4));
    CHECK_THROWS_AS(WeightSystem::from_json(nlohmann::json::parse(R"({"weights":[1,1]})")),
                    liminal::ParseError);
    CHECK_THROWS_AS(WeightSystem::from_json(nlohmann::json::parse(R"({"weights":[1,"a"],"degree":3})")),
                    liminal::ParseError);
  }

  TEST_CASE("liminal defect") {
    CHECK(liminal::liminal_defect(WeightSystem({1, 1, 1, 1}, 4)) == 0);
    CHECK(liminal::liminal_defect(WeightSystem({1, 1, 1, 1}, 2)) == 2);
    const WeightSystem reid({1, 1, 2, 4}, 8);
    CHECK(liminal::liminal_defect(reid) == 0);
    Rational sum = 0;
    for (const auto a : reid.weights()) sum += Rational(a, reid.degree());
    CHECK(sum == 1);
  }

  TEST_CASE("minimal exponent") {
    CHECK(liminal::minimal_exponent(WeightSystem({1, 1, 1, 1}, 4)) == 1);
    CHECK(liminal::minimal_exponent(WeightSystem({1, 1, 1, 1}, 2)) == 2);
    CHECK(liminal::minimal_exponent(WeightSystem({1, 1, 1, 1, 1}, 2)) == Rational(5, 2));
  }

  TEST_CASE("classification of ordinary double points and cones") {
    const auto odp3 = liminal::classify(WeightSystem({1, 1, 1, 1}, 2));
    CHECK(odp3.liminal_level == 1);
    CHECK(odp3.max_du_bois == 1);
    CHECK(odp3.max_rational == 0);
    CHECK(odp3.label() == "1-liminal");

    const auto odp4 = liminal::classify(WeightSystem({1, 1, 1, 1, 1}, 2));
    CHECK(odp4.max_du_bois == 1);
    CHECK(odp4.max_rational == 1);
    CHECK_FALSE(odp4.liminal_level.has_value());
    CHECK(odp4.label() == "1-rational");

    const auto cone = liminal::classify(WeightSystem({1, 1, 1, 1}, 4));
    CHECK(cone.zero_liminal);
    CHECK_FALSE(cone.rational);
    CHECK(cone.log_canonical);
    CHECK(cone.label() == "0-liminal");

    const auto bad = liminal::classify(WeightSystem({1, 1, 1}, 4));
    CHECK_FALSE(bad.log_canonical);
    CHECK(bad.max_du_bois == -1);
    CHECK(bad.max_rational == -1);
    CHECK(bad.label() == "not Du Bois");
  }

  TEST_CASE("defect, exponent and class agree on random systems") {
    std::mt19937_64 rng(gen::kSeed);
    std::uniform_int_distribution<int> vars(2, 7);
    std::uniform_int_distribution<std::int64_t> deg(2, 60);
    int checked = 0;
    while (checked < 500) {
      const auto d = deg(rng);
      std::vector<std::int64_t> a(static_cast<std::size_t>(vars(rng)));
      for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(1, d / 2)(rng);
      const WeightSystem ws(a, d);
      const auto alpha = liminal::minimal_exponent(ws);
      CHECK(Rational(liminal::liminal_defect(ws)) == ws.degree() * (alpha - 1));
      const auto c = liminal::classify(ws);
      CHECK(c.zero_liminal == (liminal::liminal_defect(ws) == 0));
      CHECK(c.max_rational <= c.max_du_bois);
      CHECK(c.max_du_bois <= c.max_rational + 1);
      CHECK(c.zero_liminal == (c.max_du_bois >= 0 && c.max_rational == -1));
      CHECK(c.liminal_level.has_value() == (c.max_du_bois == c.max_rational + 1));
      ++checked;
    }
  }

  TEST_CASE("scaling leaves the reduced system and class unchanged") {
    const auto systems = gen::random_isolated_systems(20);
    for (const auto& ws : systems) {
      for (const std::int64_t m : {2, 3, 5}) {
        std::vector<std::int64_t> a;
        for (const auto x : ws.input_weights()) a.push_back(m * x);
        const WeightSystem scaled(a, m * ws.degree());
        CHECK(scaled == ws);
        CHECK(liminal::minimal_exponent(scaled) == liminal::minimal_exponent(ws));
        CHECK(liminal::classify(scaled) == liminal::classify(ws));
      }
    }
  }
}

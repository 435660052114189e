// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "liminal/bigint.hpp"
#include "liminal/classify.hpp"
#include "liminal/dual_complex.hpp"
#include "liminal/enumerate.hpp"
#include "liminal/milnor.hpp"
#include "liminal/report.hpp"
#include "liminal/suite.hpp"
#include "liminal/t1.hpp"
#include "liminal/weight_system.hpp"

// JSON encodings of every report. Integers beyond 2^53 are written as decimal
// strings and rationals as {"num","den"} objects; member order is fixed.
namespace liminal::io {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
Json to_json(const Rational& value);
Json to_json(const WeightSystem& ws);
Json to_json(const SingularityClass& c);
/// Plain coefficient array.
Json to_json(const PoincarePolynomial& p);
/// [{"num","den","mult"}, ...] ascending.
Json to_json(const Spectrum& sp);
Json to_json(const T1Decomposition& t1);
Json to_json(const SystemReport& r);
Json to_json(const DiagonalFamily& fam);
Json to_json(const FamilyReport& r);
Json to_json(const suite::IdentityWitness& w);
Json to_json(const suite::LocalImageDims& dims);
Json to_json(const suite::Degree5SeriesReport& r);
Json to_json(const Violation& v);

/// Classification block used by `classify`: system, N, minimal exponent, class.
Json classification_json(const WeightSystem& ws);

/// E_1 page, h^i(|Gamma|), Euler characteristic and constraint violations.
Json dual_complex_report(const DualComplexData& d, std::optional<int> vanishing_range);

/// Inverse of to_json(BigInt): accepts integers and decimal strings.
BigInt big_from_json(const nlohmann::json& j);

}  // namespace liminal::io

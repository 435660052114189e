// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "liminal/bigint.hpp"
#include "liminal/classify.hpp"
#include "liminal/enumerate.hpp"
#include "liminal/milnor.hpp"
#include "liminal/t1.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

/// Every invariant of one weight system.
struct SystemReport {
  WeightSystem system;
  std::int64_t liminal_defect;
  Rational minimal_exponent;
  SingularityClass classification;
  PoincarePolynomial poincare;
  BigInt milnor_number;
  Spectrum spectrum;
  std::vector<BigInt> s;
  T1Decomposition t1;
};

SystemReport analyze(const WeightSystem& ws);

struct FamilyReport {
  DiagonalFamily family;
  SystemReport report;
};

FamilyReport family_report(const DiagonalFamily& fam);

}  // namespace liminal

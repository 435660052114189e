// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/report.hpp"

namespace liminal {

SystemReport analyze(const WeightSystem& ws) {
  auto poincare = poincare_polynomial(ws);
  auto sp = spectrum(ws, poincare);
  auto s = s_vector(sp);
  auto t1 = t1_decomposition(ws, poincare);
  auto mu = poincare.milnor_number();
  return SystemReport{ws,
                      liminal_defect(ws),
                      minimal_exponent(ws),
                      classify(ws),
                      std::move(poincare),
                      std::move(mu),
                      std::move(sp),
                      std::move(s),
                      std::move(t1)};
}

FamilyReport family_report(const DiagonalFamily& fam) {
  return FamilyReport{fam, analyze(fam.weight_system())};
}

}  // namespace liminal

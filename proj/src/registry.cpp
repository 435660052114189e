// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/registry.hpp"

#include <charconv>

#include "liminal/classify.hpp"
#include "liminal/enumerate.hpp"
#include "liminal/errors.hpp"
#include "liminal/milnor.hpp"

namespace liminal {

namespace {

constexpr int kListedMaxN = 8;
constexpr int kGeneratedMaxN = 64;

WeightSystem fermat_cone(int n) {
  return WeightSystem(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1), n + 1);
}

WeightSystem odp(int n) {
  return WeightSystem(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1), 2);
}

std::string family_label(const DiagonalFamily& fam) {
  std::string label = "diag";
  for (const auto p : fam.exponents) label += "-" + std::to_string(p);
  return label;
}

// Parses the N of "<prefix>N" when 1 <= N <= kGeneratedMaxN.
std::optional<int> suffix_n(std::string_view label, std::string_view prefix) {
  if (label.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = label.substr(prefix.size());
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (n < 1 || n > kGeneratedMaxN) return std::nullopt;
  return n;
}

std::vector<RegistryEntry> dual_complex_entries() {
  std::vector<RegistryEntry> out;
  out.push_back({"dc-smooth-cy", "single smooth Calabi-Yau component, n = 3",
                 DualComplexData(3, {"E"}, {{0}}, {{{{0}, 2}, 1}})});
  out.push_back({"dc-two-cy-components", "two components each with h^{n-1}(O) = 1, n = 3",
                 DualComplexData(3, {"E1", "E2"}, {{0}, {1}, {0, 1}},
                                 {{{{0}, 2}, 1}, {{{1}, 2}, 1}})});
  out.push_back({"dc-hollow-triangle", "three components meeting pairwise, no triple point, n = 3",
                 DualComplexData(3, {"E1", "E2", "E3"}, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}})});
  out.push_back({"dc-tetrahedron-boundary",
                 "four components, all pairs and triples meet, no quadruple point, n = 4",
                 DualComplexData(4, {"E1", "E2", "E3", "E4"},
                                 SimplicialComplex::closure(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
                                     .all_faces())});
  return out;
}

}  // namespace

ExampleRegistry::ExampleRegistry() {
  for (int n = 2; n <= kListedMaxN; ++n) {
    entries_.push_back({"fermat-cone-n" + std::to_string(n),
                        "Fermat cone z_1^{n+1} + ... + z_{n+1}^{n+1}, n = " + std::to_string(n),
                        fermat_cone(n)});
  }
  for (int n = 1; n <= kListedMaxN; ++n) {
    entries_.push_back({"odp-n" + std::to_string(n),
                        "ordinary double point in dimension " + std::to_string(n), odp(n)});
  }
  entries_.push_back({"reid-1-1-2-4-8", "weights (1,1,2,4), degree 8",
                      WeightSystem({1, 1, 2, 4}, 8)});
  for (const auto& fam : enumerate_diagonal_liminal(3)) {
    std::string description = "diagonal 0-liminal family with exponents";
    for (const auto p : fam.exponents) description += " " + std::to_string(p);
    entries_.push_back({family_label(fam), description, fam.weight_system()});
  }
  for (auto& e : dual_complex_entries()) entries_.push_back(std::move(e));
}

const ExampleRegistry& ExampleRegistry::builtin() {
  static const ExampleRegistry registry;
  return registry;
}

std::optional<RegistryEntry> ExampleRegistry::find(std::string_view label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return e;
  }
  if (const auto n = suffix_n(label, "fermat-cone-n")) {
    return RegistryEntry{std::string(label), "Fermat cone, n = " + std::to_string(*n), fermat_cone(*n)};
  }
  if (const auto n = suffix_n(label, "odp-n")) {
    return RegistryEntry{std::string(label), "ordinary double point, n = " + std::to_string(*n), odp(*n)};
  }
  return std::nullopt;
}

std::vector<std::string> ExampleRegistry::verify() const {
  std::vector<std::string> failures;
  for (const auto& e : entries_) {
    try {
      if (const auto* ws = std::get_if<WeightSystem>(&e.value)) {
        // Round-trip through the text form, then the graded invariants.
        if (!(WeightSystem::parse(ws->to_string()) == *ws)) {
          failures.push_back(e.label + ": text form does not round-trip");
        }
        const auto p = poincare_polynomial(*ws);
        if (!p.palindromic() || p.milnor_number() != milnor_number(*ws)) {
          failures.push_back(e.label + ": inconsistent Poincare polynomial");
        }
        if (e.label.rfind("diag-", 0) == 0 && liminal_defect(*ws) != 0) {
          failures.push_back(e.label + ": diagonal family is not 0-liminal");
        }
      } else {
        const auto& d = std::get<DualComplexData>(e.value);
        const auto& cx = d.complex();
        std::int64_t chi = 0;
        const auto h = cx.cohomology();
        for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? h[i] : -h[i];
        if (chi != cx.euler_characteristic()) failures.push_back(e.label + ": Euler characteristic mismatch");
      }
    } catch (const Error& err) {
      failures.push_back(e.label + ": " + err.kind() + ": " + err.what());
    }
  }
  return failures;
}

}  // namespace liminal

// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liminal/dual_complex.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

struct RegistryEntry {
  std::string label;
  std::string description;
  std::variant<WeightSystem, DualComplexData> value;
};

/// Named example inputs. The dimension-3 diagonal 0-liminal families are
/// produced by the enumerator when the registry is built.
class ExampleRegistry {
 public:
  static const ExampleRegistry& builtin();

  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }

  /// Listed entries, plus "fermat-cone-n{N}" and "odp-n{N}" for any 1 <= N <= 64.
  std::optional<RegistryEntry> find(std::string_view label) const;

  /// Re-runs every entry through its module's checks; returns one message per failure.
  std::vector<std::string> verify() const;

 private:
  ExampleRegistry();
  std::vector<RegistryEntry> entries_;
};

}  // namespace liminal

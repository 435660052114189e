// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "liminal/bigint.hpp"

namespace liminal {

/// Sorted vertex indices of a simplex.
using Face = std::vector<int>;

/// Finite abstract simplicial complex on vertices 0..vertex_count-1.
/// Faces are grouped by cardinality and sorted lexicographically inside each
/// group; that order fixes the coboundary bases.
class SimplicialComplex {
 public:
  /// Throws InvalidComplex unless faces are downward closed, contain every
  /// singleton and use only vertices below vertex_count.
  SimplicialComplex(int vertex_count, std::vector<Face> faces);

  /// Smallest complex containing the given faces.
  static SimplicialComplex closure(int vertex_count, const std::vector<Face>& generators);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Largest face cardinality minus one; -1 for the empty complex.
  int top_dimension() const noexcept { return static_cast<int>(by_size_.size()) - 1; }
  /// Faces with p+1 vertices.
  const std::vector<Face>& faces(int p) const;
  bool contains(const Face& f) const;
  /// Every face, by cardinality then lexicographically.
  std::vector<Face> all_faces() const;
  std::size_t face_count() const;

  /// Matrix of delta: C^p -> C^{p+1}, rows indexed by (p+1)-faces, columns by
  /// p-faces; the entry for tau = sigma + v is (-1)^k, k the position of v in tau.
  std::vector<std::vector<std::int64_t>> coboundary(int p) const;

  /// Ranks of simplicial cohomology over Q, h^0..h^top.
  std::vector<std::int64_t> cohomology() const;

  /// sum_p (-1)^p #faces(p).
  std::int64_t euler_characteristic() const;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Face>> by_size_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::int64_t rational_rank(const std::vector<std::vector<std::int64_t>>& matrix);

/// Dual complex of an SNC exceptional divisor E = E_1 + ... + E_r in an
/// n-dimensional germ, together with h^q(E_I; O_{E_I}) for each stratum.
///
/// Unlisted h^q default to 0, except h^0 which defaults to 1 (connected strata).
class DualComplexData {
 public:
  DualComplexData(int n, std::vector<std::string> components, std::vector<Face> faces,
                  std::map<std::pair<Face, int>, std::int64_t> strata_h = {});

  /// {"n":..,"components":[..],"faces":[[..]],"h":[{"face":[..],"q":..,"dim":..}]}
  static DualComplexData from_json(const nlohmann::json& j);

  int n() const noexcept { return n_; }
  const std::vector<std::string>& components() const noexcept { return components_; }
  const SimplicialComplex& complex() const noexcept { return complex_; }

  /// h^q(E_I; O); zero for q outside 0..dim E_I.
  std::int64_t h(const Face& face, int q) const;
  /// dim E_I = n - #I.
  int stratum_dim(const Face& face) const { return n_ - static_cast<int>(face.size()); }

 private:
  int n_ = 0;
  std::vector<std::string> components_;
  SimplicialComplex complex_;
  std::map<std::pair<Face, int>, std::int64_t> strata_h_;
};

/// E_1^{p,q} = sum_{#I = p+1} h^q(E_I), indexed [p][q] for 0 <= p, q <= n-1.
std::vector<std::vector<std::int64_t>> e1_page(const DualComplexData& d);

/// h^i(|Gamma|; Q).
std::vector<std::int64_t> dual_complex_cohomology(const DualComplexData& d);

struct Violation {
  /// "a", "b" or "c".
  std::string clause;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Necessary conditions for E to be the exceptional divisor of a good
/// resolution of a 0-liminal singularity:
///   (a) sum_i h^{n-1}(E_i; O) is 0 or 1;
///   (b) when it is 1, a single component carries it;
///   (c) if h^i(E; O) = 0 for 0 < i < m (asserted by the caller through
///       vanishing_range = m), then h^i(|Gamma|) = 0 for 0 < i < m.
std::vector<Violation> check_zero_liminal_constraints(const DualComplexData& d,
                                                      std::optional<int> vanishing_range = {});

}  // namespace liminal

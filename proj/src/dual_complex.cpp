// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/dual_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liminal/errors.hpp"

namespace liminal {

namespace {

std::string face_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

Face normalized(Face f, int vertex_count) {
  if (f.empty()) throw InvalidComplex("empty face");
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw InvalidComplex("repeated vertex in face " + face_string(f));
  }
  if (f.front() < 0 || f.back() >= vertex_count) {
    throw InvalidComplex("face " + face_string(f) + " uses a vertex outside 0.." +
                         std::to_string(vertex_count - 1));
  }
  return f;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvalidComplex("negative vertex count");
  std::set<Face> all;
  for (auto& f : faces) all.insert(normalized(std::move(f), vertex_count));
  for (int v = 0; v < vertex_count; ++v) {
    if (!all.count(Face{v})) throw InvalidComplex("missing singleton face {" + std::to_string(v) + "}");
  }
  for (const auto& f : all) {
    if (f.size() > by_size_.size()) by_size_.resize(f.size());
    by_size_[f.size() - 1].push_back(f);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!all.count(sub)) {
        throw InvalidComplex("face " + face_string(f) + " is present but its subface " +
                             face_string(sub) + " is not");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure(int vertex_count, const std::vector<Face>& generators) {
  std::set<Face> all;
  for (int v = 0; v < vertex_count; ++v) all.insert(Face{v});
  for (const auto& g : generators) {
    const Face f = normalized(g, vertex_count);
    const auto k = f.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1UL << i)) sub.push_back(f[i]);
      }
      all.insert(std::move(sub));
    }
  }
  return SimplicialComplex(vertex_count, std::vector<Face>(all.begin(), all.end()));
}

const std::vector<Face>& SimplicialComplex::faces(int p) const {
  static const std::vector<Face> kNone;
  if (p < 0 || p >= static_cast<int>(by_size_.size())) return kNone;
  return by_size_[static_cast<std::size_t>(p)];
}

bool SimplicialComplex::contains(const Face& f) const {
  const auto& group = faces(static_cast<int>(f.size()) - 1);
  return std::binary_search(group.begin(), group.end(), f);
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& group : by_size_) out.insert(out.end(), group.begin(), group.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& group : by_size_) total += group.size();
  return total;
}

std::vector<std::vector<std::int64_t>> SimplicialComplex::coboundary(int p) const {
  const auto& cols = faces(p);
  const auto& rows = faces(p + 1);
  std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Face& tau = rows[r];
    for (std::size_t k = 0; k < tau.size(); ++k) {
      Face sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(k));
      const auto it = std::lower_bound(cols.begin(), cols.end(), sigma);
      m[r][static_cast<std::size_t>(it - cols.begin())] = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::int64_t rational_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = matrix[i][j];
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::vector<std::int64_t> SimplicialComplex::cohomology() const {
  const int top = top_dimension();
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // rank of delta_p
  for (int p = 0; p < top; ++p) ranks[static_cast<std::size_t>(p)] = rational_rank(coboundary(p));
  std::vector<std::int64_t> h;
  for (int p = 0; p <= top; ++p) {
    const auto cochains = static_cast<std::int64_t>(faces(p).size());
    const std::int64_t incoming = p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0;
    h.push_back(cochains - ranks[static_cast<std::size_t>(p)] - incoming);
  }
  return h;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int p = 0; p <= top_dimension(); ++p) {
    const auto count = static_cast<std::int64_t>(faces(p).size());
    chi += (p % 2 == 0) ? count : -count;
  }
  return chi;
}

DualComplexData::DualComplexData(int n, std::vector<std::string> components,
                                 std::vector<Face> faces,
                                 std::map<std::pair<Face, int>, std::int64_t> strata_h)
    : n_(n),
      components_(std::move(components)),
      complex_(static_cast<int>(components_.size()), std::move(faces)) {
  if (n < 1) throw InvalidComplex("germ dimension n must be at least 1");
  if (components_.empty()) throw InvalidComplex("the divisor needs at least one component");
  for (int p = 0; p <= complex_.top_dimension(); ++p) {
    for (const auto& f : complex_.faces(p)) {
      if (stratum_dim(f) < 0) {
        throw InvalidComplex("stratum E_" + face_string(f) + " would have negative dimension " +
                             std::to_string(stratum_dim(f)) + " for n = " + std::to_string(n));
      }
    }
  }
  for (auto& [key, dim] : strata_h) {
    Face f = normalized(key.first, complex_.vertex_count());
    const int q = key.second;
    if (!complex_.contains(f)) {
      throw InvalidComplex("h^q given for E_" + face_string(f) + ", which is not a face");
    }
    if (q < 0 || dim < 0) throw InvalidComplex("negative q or dimension for E_" + face_string(f));
    if (q > stratum_dim(f) && dim != 0) {
      throw InvalidComplex("h^" + std::to_string(q) + " of E_" + face_string(f) +
                           " must vanish above its dimension " + std::to_string(stratum_dim(f)));
    }
    if (q == 0 && dim < 1) {
      throw InvalidComplex("h^0 of E_" + face_string(f) + " must be at least 1 (strata are nonempty)");
    }
    strata_h_[{std::move(f), q}] = dim;
  }
}

std::int64_t DualComplexData::h(const Face& face, int q) const {
  if (q < 0 || q > stratum_dim(face)) return 0;
  Face key = face;
  std::sort(key.begin(), key.end());
  const auto it = strata_h_.find({key, q});
  if (it != strata_h_.end()) return it->second;
  return q == 0 ? 1 : 0;
}

DualComplexData DualComplexData::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("dual complex input must be a JSON object");
    const int n = j.at("n").get<int>();
    auto components = j.at("components").get<std::vector<std::string>>();
    auto faces = j.at("faces").get<std::vector<Face>>();
    std::map<std::pair<Face, int>, std::int64_t> strata_h;
    if (j.contains("h")) {
      for (const auto& entry : j.at("h")) {
        Face f = entry.at("face").get<Face>();
        std::sort(f.begin(), f.end());
        strata_h[{std::move(f), entry.at("q").get<int>()}] = entry.at("dim").get<std::int64_t>();
      }
    }
    return DualComplexData(n, std::move(components), std::move(faces), std::move(strata_h));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed dual complex input: ") + e.what());
  }
}

std::vector<std::vector<std::int64_t>> e1_page(const DualComplexData& d) {
  const auto size = static_cast<std::size_t>(d.n());
  std::vector<std::vector<std::int64_t>> page(size, std::vector<std::int64_t>(size, 0));
  for (int p = 0; p < d.n(); ++p) {
    for (const auto& f : d.complex().faces(p)) {
      for (int q = 0; q < d.n(); ++q) {
        page[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] += d.h(f, q);
      }
    }
  }
  return page;
}

std::vector<std::int64_t> dual_complex_cohomology(const DualComplexData& d) {
  return d.complex().cohomology();
}

std::vector<Violation> check_zero_liminal_constraints(const DualComplexData& d,
                                                      std::optional<int> vanishing_range) {
  if (vanishing_range && *vanishing_range < 0) {
    throw InvalidArgument("vanishing range m must be non-negative");
  }
  std::vector<Violation> violations;
  const int top = d.n() - 1;
  std::int64_t total = 0;
  std::vector<std::string> carriers;
  for (int i = 0; i < d.complex().vertex_count(); ++i) {
    const auto h = d.h(Face{i}, top);
    total += h;
    if (h > 0) carriers.push_back(d.components()[static_cast<std::size_t>(i)]);
  }
  if (total > 1) {
    violations.push_back({"a", "sum over components of h^" + std::to_string(top) +
                                   "(E_i; O) is " + std::to_string(total) + ", expected 0 or 1"});
  }
  if (total == 1 && carriers.size() != 1) {
    violations.push_back({"b", "h^" + std::to_string(top) +
                                   "(E_i; O) = 1 must be carried by exactly one component"});
  }
  if (vanishing_range) {
    const auto h = dual_complex_cohomology(d);
    for (int i = 1; i < *vanishing_range && i < static_cast<int>(h.size()); ++i) {
      if (h[static_cast<std::size_t>(i)] != 0) {
        violations.push_back({"c", "h^" + std::to_string(i) + "(|Gamma|) = " +
                                       std::to_string(h[static_cast<std::size_t>(i)]) +
                                       " but h^i(E; O) is asserted to vanish for 0 < i < " +
                                       std::to_string(*vanishing_range)});
      }
    }
  }
  return violations;
}

}  // namespace liminal

// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/io.hpp"

#include "liminal/errors.hpp"

namespace liminal::io {

namespace {

// Largest integer every IEEE double represents exactly.
const BigInt kSafeInteger = BigInt(1) << 53;

Json big_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const BigInt& value) {
  if (boost::multiprecision::abs(value) <= kSafeInteger) return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

Json to_json(const Rational& value) {
  Json out = Json::object();
  out["num"] = to_json(numerator(value));
  out["den"] = to_json(denominator(value));
  return out;
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
    if (digits) return BigInt(s);
  }
  throw ParseError("expected an integer or decimal string, got " + j.dump());
}

Json to_json(const WeightSystem& ws) {
  Json out = Json::object();
  out["weights"] = ws.input_weights();
  out["degree"] = ws.degree();
  out["text"] = ws.to_string();
  return out;
}

Json to_json(const SingularityClass& c) {
  Json out = Json::object();
  out["label"] = c.label();
  out["log_canonical"] = c.log_canonical;
  out["zero_liminal"] = c.zero_liminal;
  out["rational"] = c.rational;
  out["max_du_bois"] = c.max_du_bois;
  out["max_rational"] = c.max_rational;
  out["liminal_level"] = optional_int(c.liminal_level);
  return out;
}

Json to_json(const PoincarePolynomial& p) { return big_array(p.coeffs); }

Json to_json(const Spectrum& sp) {
  Json out = Json::array();
  for (const auto& e : sp.entries) {
    Json entry = Json::object();
    entry["num"] = to_json(numerator(e.value));
    entry["den"] = to_json(denominator(e.value));
    entry["mult"] = to_json(e.multiplicity);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const T1Decomposition& t1) {
  Json weights = Json::object();
  for (const auto& [w, dim] : t1.by_weight) weights[std::to_string(w)] = to_json(dim);
  Json out = Json::object();
  out["weights"] = std::move(weights);
  out["K"] = to_json(t1.dim_K);
  out["Kprime"] = to_json(t1.dim_K_prime);
  out["Gr"] = to_json(t1.gr_hn_link);
  out["H1log"] = to_json(t1.h1_log);
  out["H1logminusE"] = to_json(t1.im_h1_log_minus_E);
  out["valid"] = t1.labels_valid;
  return out;
}

Json classification_json(const WeightSystem& ws) {
  Json out = Json::object();
  out["system"] = to_json(ws);
  out["n"] = ws.dim();
  out["liminal_defect"] = liminal_defect(ws);
  out["minimal_exponent"] = to_json(minimal_exponent(ws));
  out["class"] = to_json(classify(ws));
  return out;
}

Json to_json(const SystemReport& r) {
  Json out = Json::object();
  out["system"] = to_json(r.system);
  out["n"] = r.system.dim();
  out["liminal_defect"] = r.liminal_defect;
  out["minimal_exponent"] = to_json(r.minimal_exponent);
  out["class"] = to_json(r.classification);
  out["milnor_number"] = to_json(r.milnor_number);
  out["poincare"] = to_json(r.poincare);
  out["spectrum"] = to_json(r.spectrum);
  out["s"] = big_array(r.s);
  out["t1"] = to_json(r.t1);
  return out;
}

Json to_json(const DiagonalFamily& fam) { return Json(fam.exponents); }

Json to_json(const FamilyReport& r) {
  Json out = Json::object();
  out["exponents"] = to_json(r.family);
  out["report"] = to_json(r.report);
  return out;
}

Json to_json(const suite::IdentityWitness& w) {
  Json out = Json::object();
  out["dim_A_system"] = to_json(w.dim_A);
  out["moduli_E"] = to_json(w.moduli_E);
  out["t_minus"] = to_json(w.t_minus);
  out["global_t1"] = to_json(w.global_t1);
  out["holds"] = w.holds;
  out["fermat_t_minus_matches"] = w.fermat_t_minus_matches;
  return out;
}

Json to_json(const suite::LocalImageDims& dims) {
  Json out = Json::object();
  out["full"] = to_json(dims.full);
  out["image"] = to_json(dims.image);
  out["codim"] = to_json(dims.codim);
  return out;
}

Json to_json(const suite::Degree5SeriesReport& r) {
  Json out = Json::object();
  out["n"] = r.n;
  out["global_t1"] = to_json(r.global_t1);
  out["pair_moduli"] = to_json(r.pair_moduli);
  out["dim_A_system"] = to_json(r.dim_A_system);
  out["moduli_E"] = to_json(r.moduli_E);
  out["t_minus"] = to_json(r.t_minus);
  out["identity_holds"] = r.identity_holds;
  out["fermat_t_minus_matches"] = r.fermat_t_minus_matches;
  out["special_case"] = r.special_case;
  out["local_full"] = to_json(r.local_full);
  out["local_image"] = to_json(r.local_image);
  out["local_codim"] = to_json(r.local_codim);
  return out;
}

Json to_json(const Violation& v) {
  Json out = Json::object();
  out["clause"] = v.clause;
  out["message"] = v.message;
  return out;
}

Json dual_complex_report(const DualComplexData& d, std::optional<int> vanishing_range) {
  const auto& cx = d.complex();
  Json out = Json::object();
  out["n"] = d.n();
  out["components"] = d.components();
  Json counts = Json::array();
  for (int p = 0; p <= cx.top_dimension(); ++p) counts.push_back(cx.faces(p).size());
  out["face_counts"] = std::move(counts);
  out["e1_page"] = e1_page(d);
  out["cohomology"] = dual_complex_cohomology(d);
  out["euler_characteristic"] = cx.euler_characteristic();
  out["vanishing_range"] = optional_int(vanishing_range);
  Json violations = Json::array();
  for (const auto& v : check_zero_liminal_constraints(d, vanishing_range)) violations.push_back(to_json(v));
  out["violations"] = std::move(violations);
  return out;
}

}  // namespace liminal::io

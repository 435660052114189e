// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include "liminal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liminal/classify.hpp"
#include "liminal/dual_complex.hpp"
#include "liminal/enumerate.hpp"
#include "liminal/errors.hpp"
#include "liminal/io.hpp"
#include "liminal/milnor.hpp"
#include "liminal/registry.hpp"
#include "liminal/report.hpp"
#include "liminal/suite.hpp"
#include "liminal/t1.hpp"

namespace liminal::cli {

namespace {

using io::Json;

/// Bad flags or unreadable input; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  CLI::Option* json = nullptr;
  std::string json_target;
  std::string out_path;

  bool json_mode() const { return json->count() > 0; }
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  o.json = cmd->add_option("--json", o.json_target,
                           "Machine-readable output; optional FILE ('-' for stdout)")
               ->expected(0, 1);
  cmd->add_option("--out", o.out_path, "Write the output to FILE instead of stdout");
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

void emit(const OutputOptions& o, const Json& doc, const std::string& human, std::ostream& out) {
  if (o.json_mode()) {
    const std::string& path = !o.json_target.empty() ? o.json_target : o.out_path;
    write_text(doc.dump(2) + "\n", path, out);
  } else {
    write_text(human, o.out_path, out);
  }
}

struct SystemInput {
  std::string system;
  std::string weights;
  std::optional<std::int64_t> degree;
  std::string name;
  std::string input;
};

void add_system_options(CLI::App* cmd, SystemInput& in) {
  cmd->add_option("--system", in.system, "Weight system as 'a1,...,ak;d'");
  cmd->add_option("--weights", in.weights, "Comma-separated weights a1,...,ak");
  cmd->add_option("--degree", in.degree, "Weighted degree d");
  cmd->add_option("--name", in.name, "Registry entry label");
  cmd->add_option("--input", in.input, "JSON file holding {\"weights\": [...], \"degree\": d}");
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

WeightSystem resolve_system(const SystemInput& in) {
  const int sources = !in.system.empty() + (!in.weights.empty() || in.degree.has_value()) +
                      !in.name.empty() + !in.input.empty();
  if (sources != 1) {
    throw UsageError("give exactly one of --system, --weights/--degree, --name, --input");
  }
  try {
    if (!in.system.empty()) return WeightSystem::parse(in.system);
    if (!in.name.empty()) {
      const auto entry = ExampleRegistry::builtin().find(in.name);
      if (!entry) throw UsageError("--name: unknown registry entry '" + in.name + "'");
      const auto* ws = std::get_if<WeightSystem>(&entry->value);
      if (!ws) throw UsageError("--name: '" + in.name + "' is not a weight system");
      return *ws;
    }
    if (!in.input.empty()) return WeightSystem::from_json(read_json_file(in.input));
    if (in.weights.empty() || !in.degree) throw UsageError("--weights and --degree go together");
    return WeightSystem::parse(in.weights + ";" + std::to_string(*in.degree));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--system/--weights/--input: ") + e.what());
  }
}

std::string rational_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <typename Range>
std::string join(const Range& values, const std::string& sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string lines(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string family_text(const DiagonalFamily& fam) { return "(" + join(fam.exponents, ",") + ")"; }

// --- classify -------------------------------------------------------------

std::string classify_text(const WeightSystem& ws) {
  const auto c = classify(ws);
  return lines({{"system", ws.to_string()},
                {"dimension", std::to_string(ws.dim())},
                {"liminal defect", "N = " + std::to_string(liminal_defect(ws))},
                {"minimal exponent", rational_text(minimal_exponent(ws))},
                {"class", c.label()},
                {"log canonical", yes_no(c.log_canonical)},
                {"rational", yes_no(c.rational)},
                {"0-liminal", yes_no(c.zero_liminal)},
                {"max k-Du Bois", std::to_string(c.max_du_bois)},
                {"max k-rational", std::to_string(c.max_rational)}});
}

// --- spectrum -------------------------------------------------------------

Json spectrum_json(const WeightSystem& ws, const PoincarePolynomial& p, const Spectrum& sp,
                   const std::vector<BigInt>& s) {
  Json doc = Json::object();
  doc["system"] = io::to_json(ws);
  doc["n"] = ws.dim();
  doc["milnor_number"] = io::to_json(p.milnor_number());
  doc["poincare"] = io::to_json(p);
  doc["spectrum"] = io::to_json(sp);
  Json sv = Json::array();
  for (const auto& x : s) sv.push_back(io::to_json(x));
  doc["s"] = std::move(sv);
  return doc;
}

std::string spectrum_text(const WeightSystem& ws, const PoincarePolynomial& p, const Spectrum& sp,
                          const std::vector<BigInt>& s) {
  std::vector<std::string> coeffs;
  for (const auto& c : p.coeffs) coeffs.push_back(c.str());
  std::vector<std::string> entries;
  for (const auto& e : sp.entries) entries.push_back(rational_text(e.value) + " x" + e.multiplicity.str());
  std::vector<std::string> sv;
  for (const auto& x : s) sv.push_back(x.str());
  return lines({{"system", ws.to_string()},
                {"milnor number", p.milnor_number().str()},
                {"poincare", join(coeffs, " ")},
                {"spectrum", join(entries, ", ")},
                {"s_0..s_n", join(sv, " ")}});
}

// --- t1 -------------------------------------------------------------------

std::string t1_text(const WeightSystem& ws, const T1Decomposition& t1,
                    const std::optional<std::int64_t>& monomial_weight) {
  std::vector<std::string> pieces;
  for (const auto& [w, dim] : t1.by_weight) pieces.push_back(std::to_string(w) + ":" + dim.str());
  std::vector<std::pair<std::string, std::string>> rows{
      {"system", ws.to_string()},
      {"weights", join(pieces, " ")},
      {"K' = t_- (a < 0)", t1.dim_K_prime.str()},
      {"Gr (a = 0)", t1.gr_hn_link.str()},
      {"K (a <= 0)", t1.dim_K.str()},
      {"Im H1log(-E) (a > 0)", t1.im_h1_log_minus_E.str()},
      {"H1log (a >= 0)", t1.h1_log.str()},
      {"labels valid", yes_no(t1.labels_valid)}};
  if (monomial_weight) rows.emplace_back("monomial weight", std::to_string(*monomial_weight));
  return lines(rows);
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(flag + ": malformed integer '" + token + "'");
    }
  }
  return values;
}

// --- enumerate ------------------------------------------------------------

std::vector<std::string> report_row(const SystemReport& r) {
  std::vector<std::string> s;
  for (const auto& x : r.s) s.push_back(x.str());
  return {r.system.to_string(), r.classification.label(), r.milnor_number.str(),
          "(" + join(s, ",") + ")", r.t1.dim_K_prime.str(), r.t1.gr_hn_link.str()};
}

// --- suite ----------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--n: expected N or A..B, got '" + text + "'");
  }
}

std::string suite_text(const std::vector<suite::Degree5SeriesReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"n", "dim T1_Y", "dim|A|", "moduli E", "pair",
                                              "t_-", "identity", "local full", "local image",
                                              "codim"}};
  for (const auto& r : reports) {
    rows.push_back({std::to_string(r.n) + (r.special_case ? "*" : ""), r.global_t1.str(),
                    r.dim_A_system.str(), r.moduli_E.str(), r.pair_moduli.str(), r.t_minus.str(),
                    r.identity_holds && r.fermat_t_minus_matches ? "ok" : "FAIL",
                    r.local_full.str(), r.local_image.str(), r.local_codim.str()});
  }
  std::string text = table(rows);
  const bool has_special =
      std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.special_case; });
  if (has_special) text += "* n = 3: H^2(Omega^2(log E)) != 0; identity checked by count\n";
  return text;
}

// --- dual-complex ---------------------------------------------------------

std::string dual_complex_text(const DualComplexData& d, std::optional<int> m) {
  std::ostringstream os;
  const auto page = e1_page(d);
  os << "n = " << d.n() << ", components: " << join(d.components(), " ") << '\n';
  os << "E_1^{p,q} (rows q = n-1 .. 0, columns p = 0 .. n-1)\n";
  std::vector<std::vector<std::string>> rows;
  for (int q = d.n() - 1; q >= 0; --q) {
    std::vector<std::string> row{"q=" + std::to_string(q)};
    for (int p = 0; p < d.n(); ++p) {
      row.push_back(std::to_string(page[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]));
    }
    rows.push_back(std::move(row));
  }
  os << table(rows);
  os << "h^i(|Gamma|): " << join(dual_complex_cohomology(d), " ") << '\n';
  os << "euler characteristic: " << d.complex().euler_characteristic() << '\n';
  const auto violations = check_zero_liminal_constraints(d, m);
  if (violations.empty()) {
    os << "0-liminal constraints: satisfied\n";
  } else {
    for (const auto& v : violations) os << "violation (" << v.clause << "): " << v.message << '\n';
  }
  return os.str();
}

// --- registry -------------------------------------------------------------

Json registry_json(const ExampleRegistry& reg) {
  Json arr = Json::array();
  for (const auto& e : reg.entries()) {
    Json item = Json::object();
    item["label"] = e.label;
    item["description"] = e.description;
    if (const auto* ws = std::get_if<WeightSystem>(&e.value)) {
      item["kind"] = "weight_system";
      item["system"] = io::to_json(*ws);
    } else {
      const auto& d = std::get<DualComplexData>(e.value);
      item["kind"] = "dual_complex";
      Json dc = Json::object();
      dc["n"] = d.n();
      dc["components"] = d.components();
      dc["faces"] = d.complex().all_faces();
      item["dual_complex"] = std::move(dc);
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

std::string registry_text(const ExampleRegistry& reg) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : reg.entries()) {
    const auto* ws = std::get_if<WeightSystem>(&e.value);
    rows.push_back({e.label, ws ? ws->to_string() : "dual complex", e.description});
  }
  std::size_t w0 = 0, w1 = 0;
  for (const auto& r : rows) {
    w0 = std::max(w0, r[0].size());
    w1 = std::max(w1, r[1].size());
  }
  std::ostringstream aligned;
  for (const auto& r : rows) {
    aligned << r[0] << std::string(w0 - r[0].size() + 2, ' ') << r[1]
            << std::string(w1 - r[1].size() + 2, ' ') << r[2] << '\n';
  }
  return aligned.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of isolated weighted-homogeneous hypersurface singularities", "liminal"};
  app.require_subcommand(1);

  // classify
  SystemInput classify_in;
  OutputOptions classify_out;
  auto* classify_cmd = app.add_subcommand("classify", "Liminal defect, minimal exponent, k-Du Bois / k-rational class");
  add_system_options(classify_cmd, classify_in);
  add_output_options(classify_cmd, classify_out);

  // spectrum
  SystemInput spectrum_in;
  OutputOptions spectrum_out;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Poincare polynomial, Milnor number, spectrum and s_p");
  add_system_options(spectrum_cmd, spectrum_in);
  add_output_options(spectrum_cmd, spectrum_out);

  // t1
  SystemInput t1_in;
  OutputOptions t1_out;
  std::string monomial;
  auto* t1_cmd = app.add_subcommand("t1", "C*-weight decomposition of T^1");
  add_system_options(t1_cmd, t1_in);
  add_output_options(t1_cmd, t1_out);
  t1_cmd->add_option("--monomial", monomial, "Exponent vector alpha; also print its C*-weight");

  // enumerate
  int enum_dim = 0;
  bool enum_reports = false;
  std::optional<std::uint64_t> node_budget;
  OutputOptions enum_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "Diagonal 0-liminal families sum 1/p_i = 1");
  enum_cmd->add_option("--dim", enum_dim, "Dimension n of the hypersurface germ")->required();
  enum_cmd->add_flag("--reports", enum_reports, "Include the full invariants of every family");
  enum_cmd->add_option("--node-budget", node_budget, "Search node budget (default LIMINAL_NODE_BUDGET or 1e7)");
  add_output_options(enum_cmd, enum_out);

  // suite
  std::string suite_range;
  int n_cap = suite::kDefaultMaxN;
  OutputOptions suite_out;
  auto* suite_cmd = app.add_subcommand("suite", "Deformation counts of the degree n+2 Calabi-Yau series");
  suite_cmd->add_option("--n", suite_range, "N or A..B")->required();
  suite_cmd->add_option("--n-cap", n_cap, "Largest admissible n");
  add_output_options(suite_cmd, suite_out);

  // dual-complex
  std::string dc_file;
  std::string dc_name;
  std::optional<int> dc_m;
  OutputOptions dc_out;
  auto* dc_cmd = app.add_subcommand("dual-complex", "E_1 page, h^i(|Gamma|) and 0-liminal constraint checks");
  dc_cmd->add_option("file", dc_file, "Dual complex JSON file");
  dc_cmd->add_option("--name", dc_name, "Registry entry label");
  dc_cmd->add_option("--m", dc_m, "Asserted vanishing range: h^i(E; O) = 0 for 0 < i < m");
  add_output_options(dc_cmd, dc_out);

  // registry list
  bool verify = false;
  OutputOptions reg_out;
  auto* reg_cmd = app.add_subcommand("registry", "Built-in example registry");
  reg_cmd->require_subcommand(1);
  auto* reg_list = reg_cmd->add_subcommand("list", "List registry entries");
  reg_list->add_flag("--verify", verify, "Validate every entry");
  add_output_options(reg_list, reg_out);

  // batch
  std::string batch_file;
  OutputOptions batch_out;
  auto* batch_cmd = app.add_subcommand("batch", "Full reports for a JSON array of weight systems");
  batch_cmd->add_option("file", batch_file, "JSON array of {\"weights\": [...], \"degree\": d}")->required();
  add_output_options(batch_cmd, batch_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) {
      const auto ws = resolve_system(classify_in);
      emit(classify_out, io::classification_json(ws), classify_text(ws), out);
    } else if (*spectrum_cmd) {
      const auto ws = resolve_system(spectrum_in);
      const auto p = poincare_polynomial(ws);
      const auto sp = spectrum(ws, p);
      const auto s = s_vector(sp);
      emit(spectrum_out, spectrum_json(ws, p, sp, s), spectrum_text(ws, p, sp, s), out);
    } else if (*t1_cmd) {
      const auto ws = resolve_system(t1_in);
      const auto t1 = t1_decomposition(ws);
      std::optional<std::int64_t> mw;
      if (!monomial.empty()) {
        const auto alpha = parse_int_list(monomial, "--monomial");
        try {
          mw = weight_of_monomial(ws, alpha);
        } catch (const InvalidArgument& e) {
          throw UsageError(std::string("--monomial: ") + e.what());
        }
      }
      Json doc = Json::object();
      doc["system"] = io::to_json(ws);
      const Json t1_doc = io::to_json(t1);
      for (const auto& [k, v] : t1_doc.items()) doc[k] = v;
      if (mw) doc["monomial_weight"] = *mw;
      emit(t1_out, doc, t1_text(ws, t1, mw), out);
    } else if (*enum_cmd) {
      if (enum_dim < 1) throw UsageError("--dim: must be at least 1");
      EnumerationOptions options;
      try {
        options = enumeration_options_from_env();
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      if (node_budget) options.node_budget = *node_budget;
      EnumerationStats stats;
      const auto families = enumerate_diagonal_liminal(enum_dim, options, &stats);
      Json doc = Json::object();
      doc["dim"] = enum_dim;
      doc["count"] = families.size();
      doc["nodes"] = stats.nodes;
      Json fams = Json::array();
      for (const auto& f : families) fams.push_back(io::to_json(f));
      doc["families"] = std::move(fams);
      std::string text;
      if (enum_reports) {
        Json reports = Json::array();
        std::vector<std::vector<std::string>> rows{{"exponents", "system", "class", "mu", "s", "t_-", "Gr"}};
        for (const auto& f : families) {
          const auto r = family_report(f);
          reports.push_back(io::to_json(r));
          auto row = report_row(r.report);
          row.insert(row.begin(), family_text(f));
          rows.push_back(std::move(row));
        }
        doc["reports"] = std::move(reports);
        text = table(rows);
      } else {
        for (const auto& f : families) text += family_text(f) + "\n";
      }
      emit(enum_out, doc, text, out);
    } else if (*suite_cmd) {
      const auto [lo, hi] = parse_range(suite_range);
      if (lo < 3 || lo > hi || hi > n_cap) {
        throw UsageError("--n: range must satisfy 3 <= A <= B <= " + std::to_string(n_cap));
      }
      const auto reports = suite::series_report(lo, hi, n_cap);
      Json doc = Json::array();
      for (const auto& r : reports) doc.push_back(io::to_json(r));
      emit(suite_out, doc, suite_text(reports), out);
    } else if (*dc_cmd) {
      if (dc_file.empty() == dc_name.empty()) throw UsageError("give exactly one of FILE or --name");
      if (dc_m && *dc_m < 0) throw UsageError("--m: must be non-negative");
      std::optional<DualComplexData> data;
      if (!dc_name.empty()) {
        const auto entry = ExampleRegistry::builtin().find(dc_name);
        const auto* d = entry ? std::get_if<DualComplexData>(&entry->value) : nullptr;
        if (!d) throw UsageError("--name: no dual complex named '" + dc_name + "'");
        data = *d;
      } else {
        data = DualComplexData::from_json(read_json_file(dc_file));
      }
      emit(dc_out, io::dual_complex_report(*data, dc_m), dual_complex_text(*data, dc_m), out);
    } else if (*reg_cmd) {
      const auto& reg = ExampleRegistry::builtin();
      std::vector<std::string> failures;
      if (verify) failures = reg.verify();
      Json doc = Json::object();
      doc["entries"] = registry_json(reg);
      if (verify) doc["failures"] = failures;
      std::string text = registry_text(reg);
      if (verify) {
        for (const auto& f : failures) text += "FAILED " + f + "\n";
        text += "verified " + std::to_string(reg.entries().size()) + " entries, " +
                std::to_string(failures.size()) + " failures\n";
      }
      emit(reg_out, doc, text, out);
      if (!failures.empty()) return kExitDomainError;
    } else if (*batch_cmd) {
      const Json input = read_json_file(batch_file);
      if (!input.is_array()) throw UsageError("'" + batch_file + "' must hold a JSON array");
      Json reports = Json::array();
      Json skipped = Json::array();
      std::vector<std::vector<std::string>> rows{{"#", "system", "class", "mu", "s", "t_-", "Gr"}};
      std::vector<std::string> skipped_text;
      std::size_t zero_liminal = 0;
      for (std::size_t i = 0; i < input.size(); ++i) {
        try {
          const auto r = analyze(WeightSystem::from_json(input[i]));
          Json item = io::to_json(r);
          item["index"] = i;
          reports.push_back(std::move(item));
          if (r.classification.zero_liminal) ++zero_liminal;
          auto row = report_row(r);
          row.insert(row.begin(), std::to_string(i));
          rows.push_back(std::move(row));
        } catch (const Error& e) {
          Json item = Json::object();
          item["index"] = i;
          item["input"] = input[i];
          item["error"] = e.kind();
          item["message"] = e.what();
          skipped.push_back(std::move(item));
          skipped_text.push_back("skipped #" + std::to_string(i) + ": " + e.kind() + ": " + e.what());
        }
      }
      Json summary = Json::object();
      summary["total"] = input.size();
      summary["reported"] = reports.size();
      summary["skipped"] = skipped.size();
      summary["zero_liminal"] = zero_liminal;
      Json doc = Json::object();
      doc["reports"] = std::move(reports);
      doc["skipped"] = std::move(skipped);
      doc["summary"] = summary;
      std::string text = rows.size() > 1 ? table(rows) : "";
      for (const auto& s : skipped_text) text += s + "\n";
      text += "total " + std::to_string(input.size()) + ", reported " +
              std::to_string(summary["reported"].get<std::size_t>()) + ", skipped " +
              std::to_string(summary["skipped"].get<std::size_t>()) + ", 0-liminal " +
              std::to_string(zero_liminal) + "\n";
      emit(batch_out, doc, text, out);
      for (const auto& s : skipped_text) err << s << '\n';
      if (!skipped_text.empty()) return kExitDomainError;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace liminal::cli

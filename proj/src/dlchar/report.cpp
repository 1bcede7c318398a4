/* Copyright (C) 2026 The dlchar Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "dlchar/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "dlchar/errors.hpp"

namespace dlchar {

using ojson = nlohmann::ordered_json;

namespace {

std::string mode_name(AutomorphismKind k) {
  return k == AutomorphismKind::kFieldFrobenius ? "frobenius" : "transpose-inverse";
}

AutomorphismKind parse_mode(const std::string& s) {
  if (s == "frobenius") return AutomorphismKind::kFieldFrobenius;
  if (s == "transpose-inverse") return AutomorphismKind::kTransposeInverse;
  throw InvalidArgument("unknown mode '" + s + "'");
}

std::string selection_name(ThetaSelection s) {
  switch (s) {
    case ThetaSelection::kAll: return "all";
    case ThetaSelection::kExplicit: return "explicit";
    case ThetaSelection::kSample: return "sample";
  }
  return "all";
}

ThetaSelection parse_selection(const std::string& s) {
  if (s == "all") return ThetaSelection::kAll;
  if (s == "explicit") return ThetaSelection::kExplicit;
  if (s == "sample") return ThetaSelection::kSample;
  throw InvalidArgument("unknown theta selection '" + s + "'");
}

ojson integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(z.get_str());
}

mpz_class integer_from_json(const ojson& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

ojson cyclo_json(const CycloNumber& v) {
  ojson coeffs = ojson::array();
  for (const auto& c : v.coefficients()) coeffs.push_back(ojson::array({integer_json(c.get_num()), integer_json(c.get_den())}));
  return ojson{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const ojson& j) {
  std::vector<mpq_class> coeffs;
  for (const auto& c : j.at("coeffs")) {
    mpq_class q(integer_from_json(c.at(0)), integer_from_json(c.at(1)));
    q.canonicalize();
    coeffs.push_back(q);
  }
  return CycloNumber::from_coefficients(j.at("conductor").get<std::uint32_t>(), std::move(coeffs));
}

ojson matrix_json(const GroupContext& ctx, const Mat& m) {
  const Field& F = ctx.ambient_field();
  ojson rows = ojson::array();
  for (unsigned i = 0; i < m.n; ++i) {
    ojson row = ojson::array();
    for (unsigned j = 0; j < m.n; ++j) row.push_back(F.coefficients(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const GroupContext& ctx, const ojson& j) {
  const Field& F = ctx.ambient_field();
  Mat m(ctx.n());
  if (j.size() != ctx.n()) throw InvalidArgument("matrix has the wrong number of rows");
  for (unsigned i = 0; i < ctx.n(); ++i) {
    if (j.at(i).size() != ctx.n()) throw InvalidArgument("matrix has the wrong number of columns");
    for (unsigned k = 0; k < ctx.n(); ++k) {
      auto coeffs = j.at(i).at(k).get<std::vector<unsigned>>();
      m.set(i, k, F.from_coefficients(coeffs));
    }
  }
  return m;
}

ojson config_json(const VerifyConfig& c, const GroupContext& ctx) {
  ojson s = ojson::array();
  for (const auto& m : c.s_tilde) s.push_back(matrix_json(ctx, m));
  return ojson{{"mode", mode_name(c.mode)},
               {"n", c.n},
               {"q", c.q},
               {"ell", c.ell},
               {"partitions", c.partitions},
               {"theta_selection", selection_name(c.theta_selection)},
               {"theta_exponents", c.theta_exponents},
               {"theta_all_limit", c.theta_all_limit},
               {"theta_sample_size", c.theta_sample_size},
               {"s_tilde", s},
               {"extra_conjugates", c.extra_conjugates},
               {"budget", c.budget},
               {"seed", c.seed},
               {"trials", c.trials},
               {"check_full_oracle", c.check_full_oracle}};
}

VerifyConfig config_from_json(const ojson& j) {
  VerifyConfig c;
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.n = j.at("n").get<unsigned>();
  c.q = j.at("q").get<unsigned>();
  c.ell = j.at("ell").get<unsigned>();
  c.partitions = j.at("partitions").get<std::vector<std::vector<unsigned>>>();
  c.theta_selection = parse_selection(j.at("theta_selection").get<std::string>());
  c.theta_exponents = j.at("theta_exponents").get<std::vector<std::uint32_t>>();
  c.theta_all_limit = j.at("theta_all_limit").get<std::size_t>();
  c.theta_sample_size = j.at("theta_sample_size").get<std::size_t>();
  c.extra_conjugates = j.at("extra_conjugates").get<unsigned>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<unsigned>();
  c.check_full_oracle = j.at("check_full_oracle").get<bool>();
  return c;
}

ojson tower_json(const GroupContext& ctx) {
  ojson moduli = ojson::object();
  for (unsigned m : ctx.tower()->degrees()) moduli[std::to_string(m)] = ctx.tower()->field(m).modulus();
  return ojson{{"characteristic", ctx.characteristic()},
               {"base_degree", ctx.base_degree()},
               {"ambient_degree", ctx.ambient_degree()},
               {"moduli", moduli}};
}

std::string theta_string(const std::vector<std::uint32_t>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

std::string tsv_field(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s.empty() ? "-" : s;
}

std::string fixed_seconds(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string emit_json(const VerifyReport& r) {
  const GroupContext& ctx = *r.context;
  ojson manifest{{"tool", "dlchar"},
                 {"version", kVersion},
                 {"check", r.check},
                 {"group", ctx.describe()},
                 {"config", config_json(r.config, ctx)},
                 {"tower", tower_json(ctx)},
                 {"counters", ojson{{"elements_scanned", r.elements_scanned}}},
                 {"notes", r.notes}};
  if (!r.timings.empty()) {
    ojson t = ojson::object();
    for (const auto& [k, v] : r.timings) t[k] = fixed_seconds(v);
    manifest["timings_seconds"] = t;
  }
  ojson cases = ojson::array();
  for (const auto& c : r.cases) {
    ojson j;
    j["s_tilde"] = c.vacuous ? ojson(nullptr) : matrix_json(ctx, c.s_tilde);
    j["torus_T"] = c.torus_T;
    j["theta_exponents"] = c.theta_exponents;
    j["source_torus"] = c.source_torus;
    j["torus_S"] = c.torus_S;
    j["lhs"] = c.lhs ? cyclo_json(*c.lhs) : ojson(nullptr);
    j["rhs"] = c.rhs ? cyclo_json(*c.rhs) : ojson(nullptr);
    j["lhs_full"] = c.lhs_full ? cyclo_json(*c.lhs_full) : ojson(nullptr);
    j["match"] = c.match;
    j["vacuous"] = c.vacuous;
    j["note"] = c.note;
    j["counters"] = c.counters;
    cases.push_back(std::move(j));
  }
  const auto s = r.summary();
  ojson out{{"manifest", manifest},
            {"cases", cases},
            {"summary", ojson{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"vacuous", s.vacuous}}},
            {"vacuous", r.is_vacuous()},
            {"success", r.success()}};
  return out.dump(2) + "\n";
}

std::string emit_tsv(const VerifyReport& r) {
  const GroupContext& ctx = *r.context;
  std::ostringstream os;
  os << "# dlchar " << kVersion << "\t" << r.check << "\t" << ctx.describe() << "\n";
  for (const auto& [k, v] : r.notes) os << "# note\t" << k << "\t" << tsv_field(v) << "\n";
  for (const auto& [k, v] : r.timings) os << "# timing\t" << k << "\t" << fixed_seconds(v) << "\n";
  os << "s_tilde\ttorus_T\ttheta_exponents\tsource_torus\ttorus_S\tlhs\trhs\tlhs_full\tmatch\tvacuous\tnote\n";
  for (const auto& c : r.cases) {
    os << (c.vacuous ? "-" : format_matrix(ctx, c.s_tilde)) << "\t" << tsv_field(c.torus_T) << "\t"
       << tsv_field(theta_string(c.theta_exponents)) << "\t" << tsv_field(c.source_torus) << "\t"
       << tsv_field(c.torus_S) << "\t" << (c.lhs ? c.lhs->to_string() : "-") << "\t"
       << (c.rhs ? c.rhs->to_string() : "-") << "\t" << (c.lhs_full ? c.lhs_full->to_string() : "-") << "\t"
       << (c.match ? "true" : "false") << "\t" << (c.vacuous ? "true" : "false") << "\t" << tsv_field(c.note) << "\n";
  }
  const auto s = r.summary();
  os << "# summary\ttotal=" << s.total << "\tpassed=" << s.passed << "\tfailed=" << s.failed
     << "\tvacuous=" << s.vacuous << "\n";
  return os.str();
}

std::string emit_text(const VerifyReport& r) {
  const GroupContext& ctx = *r.context;
  std::ostringstream os;
  os << "dlchar " << kVersion << ": " << r.check << " on " << ctx.describe() << "\n";
  for (const auto& [k, v] : r.notes) os << "  " << k << ": " << v << "\n";
  for (const auto& c : r.cases) {
    if (c.vacuous) {
      os << "  [vacuous] T=" << c.torus_T << ": " << c.note << "\n";
      continue;
    }
    os << "  [" << (c.match ? "ok" : "MISMATCH") << "] s~=" << format_matrix(ctx, c.s_tilde) << " T=" << c.torus_T;
    if (!c.theta_exponents.empty()) os << " theta=(" << theta_string(c.theta_exponents) << ")";
    os << " S=" << c.torus_S;
    if (c.lhs) os << "  lhs=" << c.lhs->to_string();
    if (c.rhs) os << "  rhs=" << c.rhs->to_string();
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  const auto s = r.summary();
  os << "summary: total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", vacuous "
     << s.vacuous << (r.is_vacuous() ? " [vacuous report]" : "") << "\n";
  for (const auto& [k, v] : r.timings) os << "timing " << k << ": " << fixed_seconds(v) << " s\n";
  return os.str();
}

}  // namespace

std::string format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::kJson: return "json";
    case ReportFormat::kTsv: return "tsv";
    case ReportFormat::kText: return "text";
  }
  return "json";
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "text") return ReportFormat::kText;
  throw InvalidArgument("unknown report format '" + name + "'");
}

std::string emit_report(const VerifyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(report);
    case ReportFormat::kTsv: return emit_tsv(report);
    case ReportFormat::kText: return emit_text(report);
  }
  return emit_json(report);
}

VerifyReport parse_report_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
  try {
    const ojson& m = j.at("manifest");
    VerifyReport r;
    r.check = m.at("check").get<std::string>();
    r.config = config_from_json(m.at("config"));
    r.context = GroupContext::create(r.config.mode, r.config.n, r.config.q, r.config.ell, r.config.budget);
    if (tower_json(*r.context) != m.at("tower")) throw InvalidArgument("report tower moduli differ from this build");
    for (const auto& s : m.at("config").at("s_tilde")) r.config.s_tilde.push_back(matrix_from_json(*r.context, s));
    r.elements_scanned = m.at("counters").at("elements_scanned").get<std::uint64_t>();
    r.notes = m.at("notes").get<std::map<std::string, std::string>>();
    if (m.contains("timings_seconds"))
      for (const auto& [k, v] : m.at("timings_seconds").items()) r.timings[k] = std::stod(v.get<std::string>());
    for (const auto& c : j.at("cases")) {
      CaseRecord rec;
      rec.vacuous = c.at("vacuous").get<bool>();
      if (!c.at("s_tilde").is_null()) rec.s_tilde = matrix_from_json(*r.context, c.at("s_tilde"));
      rec.torus_T = c.at("torus_T").get<std::string>();
      rec.theta_exponents = c.at("theta_exponents").get<std::vector<std::uint32_t>>();
      rec.source_torus = c.at("source_torus").get<std::string>();
      rec.torus_S = c.at("torus_S").get<std::string>();
      if (!c.at("lhs").is_null()) rec.lhs = cyclo_from_json(c.at("lhs"));
      if (!c.at("rhs").is_null()) rec.rhs = cyclo_from_json(c.at("rhs"));
      if (!c.at("lhs_full").is_null()) rec.lhs_full = cyclo_from_json(c.at("lhs_full"));
      rec.match = c.at("match").get<bool>();
      rec.note = c.at("note").get<std::string>();
      rec.counters = c.at("counters").get<std::map<std::string, std::int64_t>>();
      r.cases.push_back(std::move(rec));
    }
    const auto s = r.summary();
    const ojson& js = j.at("summary");
    if (js.at("total") != s.total || js.at("passed") != s.passed || js.at("failed") != s.failed ||
        js.at("vacuous") != s.vacuous)
      throw InvalidArgument("report summary does not match its case records");
    return r;
  } catch (const ojson::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

std::string format_matrix(const GroupContext& ctx, const Mat& m) {
  const Field& F = ctx.ambient_field();
  std::string s;
  for (unsigned i = 0; i < m.n; ++i) {
    if (i) s += ";";
    for (unsigned j = 0; j < m.n; ++j) {
      if (j) s += ",";
      if (F.degree() == 1) {
        s += std::to_string(m(i, j));
        continue;
      }
      const auto c = F.coefficients(m(i, j));
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ":" : "") + std::to_string(c[k]);
    }
  }
  return s;
}

Mat parse_matrix(const GroupContext& ctx, const std::string& text) {
  const Field& F = ctx.ambient_field();
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
  };
  auto number = [&](const std::string& tok) -> unsigned long {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size()) throw InvalidArgument("bad matrix entry '" + tok + "'");
    return v;
  };
  const auto rows = split(text, ';');
  if (rows.size() != ctx.n()) throw InvalidArgument("matrix needs " + std::to_string(ctx.n()) + " rows");
  Mat m(ctx.n());
  for (unsigned i = 0; i < ctx.n(); ++i) {
    const auto entries = split(rows[i], ',');
    if (entries.size() != ctx.n()) throw InvalidArgument("matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (unsigned j = 0; j < ctx.n(); ++j) {
      std::string e = entries[j];
      e.erase(0, e.find_first_not_of(' '));
      e.erase(e.find_last_not_of(' ') + 1);
      Elem code;
      if (e.find(':') != std::string::npos) {
        std::vector<unsigned> coeffs;
        for (const auto& tok : split(e, ':')) {
          const auto v = number(tok);
          if (v >= F.characteristic()) throw InvalidArgument("coefficient out of range in '" + e + "'");
          coeffs.push_back(unsigned(v));
        }
        if (coeffs.size() > F.degree()) throw InvalidArgument("too many coefficients in '" + e + "'");
        coeffs.resize(F.degree(), 0);
        code = F.from_coefficients(coeffs);
      } else {
        const auto v = number(e);
        if (v >= F.size()) throw InvalidArgument("entry code out of range: '" + e + "'");
        code = Elem(v);
      }
      m.set(i, j, code);
    }
  }
  return m;
}

}  // namespace dlchar

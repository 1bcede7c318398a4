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
#include "dlchar/dlchar.h"

#include <chrono>
#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>

#include "dlchar/errors.hpp"
#include "dlchar/report.hpp"
#include "dlchar/verification.hpp"

struct dlc_session {
  dlchar::VerifyConfig config;
  bool timings = false;
  unsigned mutation = 0;
  dlchar::ContextPtr ctx;
};

namespace {

using namespace dlchar;
using ojson = nlohmann::ordered_json;

thread_local std::string g_last_error;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<unsigned> parse_uint_list(const std::string& s, const char* what) {
  std::vector<unsigned> out;
  for (auto tok : split(s, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || v > UINT32_MAX)
      throw InvalidArgument(std::string("bad ") + what + " '" + s + "'");
    out.push_back(unsigned(v));
  }
  if (out.empty()) throw InvalidArgument(std::string("empty ") + what);
  return out;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
dlc_status guarded(F&& f) {
  g_last_error.clear();
  auto fail = [](dlc_status st, const char* code, const char* what) {
    g_last_error = std::string(code) + ": " + what;
    return st;
  };
  try {
    f();
    return DLC_OK;
  } catch (const BudgetExceeded& e) {
    return fail(DLC_E_BUDGET, "E_BUDGET", e.what());
  } catch (const PreconditionViolated& e) {
    return fail(DLC_E_PRECONDITION, "E_PRECONDITION", e.what());
  } catch (const ContractViolation& e) {
    return fail(DLC_E_CONTRACT, "E_CONTRACT", e.what());
  } catch (const InternalError& e) {
    return fail(DLC_E_INTERNAL, "E_INTERNAL", e.what());
  } catch (const InvalidArgument& e) {
    return fail(DLC_E_INVALID, "E_INVALID", e.what());
  } catch (const std::bad_alloc&) {
    return fail(DLC_E_INTERNAL, "E_INTERNAL", "out of memory");
  } catch (const std::exception& e) {
    return fail(DLC_E_INTERNAL, "E_INTERNAL", e.what());
  }
}

TorusPtr pick_torus(const dlc_session& s, const char* partition) {
  if (s.ctx->kind() == AutomorphismKind::kTransposeInverse) return orthogonal_torus(s.ctx);
  if (!partition || !*partition) throw InvalidArgument("a partition is required to select T");
  auto lam = parse_uint_list(partition, "partition");
  return torus_from_partition(s.ctx, lam, TorusLevel::kFixed);
}

TorusCharacter pick_theta(const TorusPtr& T, const char* theta) {
  if (!theta || !*theta) return TorusCharacter(T, std::vector<std::uint32_t>(T->orders().size(), 0));
  auto a = parse_uint_list(theta, "theta exponents");
  return TorusCharacter(T, std::vector<std::uint32_t>(a.begin(), a.end()));
}

ojson cyclo_json(const CycloNumber& v) {
  ojson coeffs = ojson::array();
  for (const auto& c : v.coefficients()) coeffs.push_back(ojson::array({c.get_num().get_si(), c.get_den().get_si()}));
  return ojson{{"conductor", v.conductor()}, {"coeffs", coeffs}, {"text", v.to_string()}};
}

std::string value_output(const dlc_session& s, const char* what, const TorusCharacter& theta, const Mat& x,
                         const CycloNumber& v, dlc_format format) {
  std::string exps;
  for (std::size_t i = 0; i < theta.exponents().size(); ++i)
    exps += (i ? "," : "") + std::to_string(theta.exponents()[i]);
  if (format == DLC_FORMAT_JSON) {
    ojson j{{"quantity", what},
            {"group", s.ctx->describe()},
            {"torus_T", theta.torus()->label()},
            {"theta_exponents", theta.exponents()},
            {"element", format_matrix(*s.ctx, x)},
            {"value", cyclo_json(v)}};
    return j.dump(2) + "\n";
  }
  if (format == DLC_FORMAT_TSV)
    return std::string("quantity\ttorus_T\ttheta_exponents\telement\tvalue\n") + what + "\t" + theta.torus()->label() +
           "\t" + exps + "\t" + format_matrix(*s.ctx, x) + "\t" + v.to_string() + "\n";
  return v.to_string() + "\n";
}

ojson torus_json(const RationalTorus& T) {
  return ojson{{"label", T.label()},
               {"points", T.size()},
               {"cyclic_orders", T.orders()},
               {"factor_degrees", T.factor_degrees()},
               {"hull_dimension_over_Fp", T.hull().dimension()}};
}

}  // namespace

extern "C" {

void dlc_options_init(dlc_options* o) {
  if (!o) return;
  std::memset(o, 0, sizeof(*o));
  o->mode = DLC_MODE_FROBENIUS;
  o->n = 2;
  o->q = 2;
  o->ell = 2;
  o->extra_conjugates = 1;
  o->budget = kDefaultBudget;
  o->seed = 1;
  o->trials = 10;
  o->check_full_oracle = 1;
}

dlc_status dlc_session_create(const dlc_options* o, dlc_session** out) {
  return guarded([&] {
    if (!o || !out) throw InvalidArgument("null argument");
    *out = nullptr;
    auto s = std::make_unique<dlc_session>();
    VerifyConfig& c = s->config;
    if (o->mode != DLC_MODE_FROBENIUS && o->mode != DLC_MODE_TRANSPOSE_INVERSE) throw InvalidArgument("unknown mode");
    c.mode = o->mode == DLC_MODE_FROBENIUS ? AutomorphismKind::kFieldFrobenius : AutomorphismKind::kTransposeInverse;
    c.n = o->n;
    c.q = o->q;
    c.ell = o->ell;
    if (o->partitions && *o->partitions)
      for (const auto& p : split(o->partitions, ';')) c.partitions.push_back(parse_uint_list(p, "partition"));
    if (o->theta && *o->theta) {
      c.theta_selection = ThetaSelection::kExplicit;
      auto a = parse_uint_list(o->theta, "theta exponents");
      c.theta_exponents.assign(a.begin(), a.end());
    } else if (o->theta_sample) {
      c.theta_selection = ThetaSelection::kSample;
      c.theta_sample_size = o->theta_sample;
    }
    c.extra_conjugates = o->extra_conjugates;
    c.budget = o->budget;
    c.seed = o->seed;
    c.trials = o->trials;
    c.check_full_oracle = o->check_full_oracle != 0;
    s->timings = o->timings != 0;
    s->mutation = o->mutation;
    s->ctx = make_context(c);
    if (o->s_tilde && *o->s_tilde)
      for (const auto& m : split(o->s_tilde, '|')) c.s_tilde.push_back(parse_matrix(*s->ctx, m));
    *out = s.release();
  });
}

void dlc_session_destroy(dlc_session* s) { delete s; }

dlc_status dlc_run_check(dlc_session* s, dlc_check check, dlc_format format, char** out_report, int* out_success) {
  return guarded([&] {
    if (!s || !out_report) throw InvalidArgument("null argument");
    *out_report = nullptr;
    Mutation m;
    m.drop_norm_image_point = s->mutation & DLC_MUTATE_DROP_NORM_IMAGE;
    m.mismatched_torus = s->mutation & DLC_MUTATE_MISMATCHED_TORUS;
    m.non_normalizing_lift = s->mutation & DLC_MUTATE_BAD_LIFT;
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport r;
    switch (check) {
      case DLC_CHECK_THEOREM: r = verify_theorem(s->config); break;
      case DLC_CHECK_NORMALIZER: r = verify_normalizer_characterization(s->config, m); break;
      case DLC_CHECK_VANISHING: r = verify_vanishing(s->config, m); break;
      case DLC_CHECK_COUNTEREXAMPLE: r = find_remark_counterexample(s->config); break;
      case DLC_CHECK_LIFT: r = verify_lift_independence(s->config, m); break;
      default: throw InvalidArgument("unknown check");
    }
    if (s->timings) r.timings["run"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ReportFormat f = format == DLC_FORMAT_TSV    ? ReportFormat::kTsv
                     : format == DLC_FORMAT_TEXT ? ReportFormat::kText
                                                 : ReportFormat::kJson;
    *out_report = dup(emit_report(r, f));
    if (out_success) *out_success = r.success() ? 1 : 0;
  });
}

dlc_status dlc_dl_value(dlc_session* s, const char* partition, const char* theta, const char* element,
                        dlc_format format, char** out) {
  return guarded([&] {
    if (!s || !out || !element) throw InvalidArgument("null argument");
    *out = nullptr;
    const TorusPtr T = pick_torus(*s, partition);
    DLCharacter chi(pick_theta(T, theta));
    const Mat x = parse_matrix(*s->ctx, element);
    *out = dup(value_output(*s, "dl_value", chi.theta(), x, dl_value(chi, x), format));
  });
}

dlc_status dlc_twisted_value(dlc_session* s, const char* partition, const char* theta, const char* element, int full,
                             dlc_format format, char** out) {
  return guarded([&] {
    if (!s || !out || !element) throw InvalidArgument("null argument");
    *out = nullptr;
    const TorusPtr T = pick_torus(*s, partition);
    TwistedDLCharacter chi(pick_theta(T, theta));
    const Mat x = parse_matrix(*s->ctx, element);
    const CycloNumber v = full ? twisted_dl_value_full(chi, x) : twisted_dl_value_collapsed(chi, x);
    *out = dup(value_output(*s, full ? "twisted_value_full" : "twisted_value", chi.theta(), x, v, format));
  });
}

dlc_status dlc_list_tori(dlc_session* s, dlc_format format, char** out) {
  return guarded([&] {
    if (!s || !out) throw InvalidArgument("null argument");
    *out = nullptr;
    ojson tori = ojson::array();
    std::ostringstream text;
    text << s->ctx->describe() << "\n";
    for (const auto& T : target_tori(s->ctx, s->config)) {
      const auto Tt = centralizer_torus(T);
      const auto W = weyl_group(T, true);
      ojson j = torus_json(*T);
      j["weyl_order"] = W.representatives.size();
      j["centralizer"] = torus_json(*Tt);
      tori.push_back(j);
      text << "T " << T->label() << ": |P| = " << T->size() << ", |W| = " << W.representatives.size() << ", "
           << Tt->label() << ": |P| = " << Tt->size() << "\n";
    }
    ojson family = ojson::array();
    for (const auto& S : epsilon_stable_family(s->ctx, s->config.extra_conjugates)) {
      family.push_back(torus_json(*S));
      text << "eps-stable " << S->label() << ": |P| = " << S->size() << "\n";
    }
    if (format == DLC_FORMAT_JSON) {
      *out = dup(ojson{{"group", s->ctx->describe()}, {"tori_of_G", tori}, {"epsilon_stable_family", family}}.dump(2) +
                 "\n");
    } else {
      *out = dup(text.str());
    }
  });
}

const char* dlc_last_error(void) { return g_last_error.c_str(); }

const char* dlc_status_name(dlc_status st) {
  switch (st) {
    case DLC_OK: return "OK";
    case DLC_E_INVALID: return "E_INVALID";
    case DLC_E_BUDGET: return "E_BUDGET";
    case DLC_E_PRECONDITION: return "E_PRECONDITION";
    case DLC_E_CONTRACT: return "E_CONTRACT";
    case DLC_E_INTERNAL: return "E_INTERNAL";
    case DLC_E_IO: return "E_IO";
  }
  return "E_UNKNOWN";
}

void dlc_free(char* p) { std::free(p); }

const char* dlc_version(void) { return kVersion; }

}  // extern "C"

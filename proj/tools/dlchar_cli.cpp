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
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dlchar/dlchar.h"

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

int exit_code_for(dlc_status st) {
  switch (st) {
    case DLC_OK: return kPass;
    case DLC_E_BUDGET: return kBudget;
    case DLC_E_INVALID:
    case DLC_E_PRECONDITION:
    case DLC_E_IO: return kUsage;
    default: return kInternal;
  }
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + v[i];
  return s;
}

struct Args {
  std::string mode = "frobenius";
  unsigned n = 2, q = 2, ell = 2;
  std::vector<std::string> partitions;
  std::string theta;
  bool all_theta = false;
  unsigned theta_sample = 0;
  std::string element;
  std::vector<std::string> s_tilde;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned trials = 10;
  unsigned extra_conjugates = 1;
  bool no_full_oracle = false;
  bool timings = false;
  bool full = false;
  std::string mutate;
};

int report_error(dlc_status st) {
  std::cerr << "dlchar: " << dlc_last_error() << "\n";
  return exit_code_for(st);
}

int write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0 ? kPass : kUsage;
  }
  std::ofstream f(path, std::ios::binary);
  if (f) f << text;
  if (!f) {
    std::cerr << "dlchar: E_IO: cannot write '" << path << "'\n";
    return kUsage;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deligne-Lusztig character values and twisted-character verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dlc_version()));
  Args a;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--mode", a.mode, "frobenius | transpose-inverse")
        ->check(CLI::IsMember({"frobenius", "transpose-inverse"}));
    sub->add_option("--n", a.n, "matrix size");
    sub->add_option("--q", a.q, "order of the base field");
    sub->add_option("--ell", a.ell, "order of eps");
    sub->add_option("--budget", a.budget, "largest group to enumerate");
  };
  auto add_format = [&](CLI::App* sub, const char* def) {
    sub->add_option("--format", a.format, std::string("json | tsv | text (default ") + def + ")")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--out", a.out, "write to PATH instead of stdout");
  };
  auto add_verify = [&](CLI::App* sub) {
    add_group(sub);
    add_format(sub, "json");
    sub->add_option("--partition", a.partitions, "partition of n for T, e.g. 1,1 (repeatable; default all)");
    auto* th = sub->add_option("--theta", a.theta, "exponent tuple of one character, e.g. 1,0");
    sub->add_flag("--all-theta", a.all_theta, "every character (the default)")->excludes(th);
    sub->add_option("--theta-sample", a.theta_sample, "seeded sample of K characters per torus")->excludes(th);
    sub->add_option("--s-tilde", a.s_tilde, "explicit s~ (repeatable; default: eps-stable torus family)");
    sub->add_option("--seed", a.seed, "random seed");
    sub->add_option("--trials", a.trials, "randomized lift choices per case (verify-lift)");
    sub->add_option("--extra-conjugates", a.extra_conjugates, "eps-stable conjugates added per standard torus");
    sub->add_flag("--no-full-oracle", a.no_full_oracle, "skip the semidirect-product cross-check");
    sub->add_flag("--timings", a.timings, "include wall-clock timings (breaks byte-stability)");
    sub->add_option("--mutate", a.mutate, "harness self-test: drop-norm-image | mismatched-torus | bad-lift")
        ->check(CLI::IsMember({"drop-norm-image", "mismatched-torus", "bad-lift"}));
  };
  auto add_value = [&](CLI::App* sub) {
    add_group(sub);
    add_format(sub, "text");
    sub->add_option("--partition", a.partitions, "partition of n for T, e.g. 1,1")->expected(1);
    sub->add_option("--theta", a.theta, "exponent tuple of the character (default trivial)");
    sub->add_option("--element", a.element, "matrix rows separated by ';', entries by ','")->required();
  };

  struct Check {
    const char* name;
    const char* help;
    dlc_check check;
  };
  const Check checks[] = {
      {"verify-theorem", "compare both sides of the twisted character identity", DLC_CHECK_THEOREM},
      {"verify-normalizer", "normalizer of S versus the norm-image description", DLC_CHECK_NORMALIZER},
      {"verify-vanishing", "both sides vanish when s~ is not twisted-conjugate into T~", DLC_CHECK_VANISHING},
      {"counterexample", "search for a failure with N(s~) singular (transpose-inverse mode)", DLC_CHECK_COUNTEREXAMPLE},
      {"verify-lift", "independence of the RHS from the choice of lifts", DLC_CHECK_LIFT},
  };
  std::vector<std::pair<CLI::App*, dlc_check>> check_cmds;
  for (const auto& c : checks) check_cmds.emplace_back(app.add_subcommand(c.name, c.help), c.check);
  for (auto& [sub, _] : check_cmds) add_verify(sub);
  auto* dl = app.add_subcommand("dl-value", "R_T^G theta at a regular semisimple element of G(k)");
  auto* tw = app.add_subcommand("twisted-value", "twisted character value at an element of G~(k)");
  add_value(dl);
  add_value(tw);
  tw->add_flag("--full", a.full, "use the semidirect-product formula");
  auto* lt = app.add_subcommand("list-tori", "standard tori of G and the eps-stable family of G~");
  add_group(lt);
  add_format(lt, "text");
  lt->add_option("--partition", a.partitions, "restrict to these partitions");
  lt->add_option("--extra-conjugates", a.extra_conjugates, "eps-stable conjugates added per standard torus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string partitions = join(a.partitions, ';');
  const std::string s_tilde = join(a.s_tilde, '|');
  dlc_options o;
  dlc_options_init(&o);
  o.mode = a.mode == "frobenius" ? DLC_MODE_FROBENIUS : DLC_MODE_TRANSPOSE_INVERSE;
  o.n = a.n;
  o.q = a.q;
  o.ell = a.ell;
  o.partitions = partitions.c_str();
  o.theta = a.theta.empty() ? nullptr : a.theta.c_str();
  o.theta_sample = a.theta_sample;
  o.s_tilde = s_tilde.c_str();
  o.extra_conjugates = a.extra_conjugates;
  o.budget = a.budget;
  o.seed = a.seed;
  o.trials = a.trials;
  o.check_full_oracle = a.no_full_oracle ? 0 : 1;
  o.timings = a.timings ? 1 : 0;
  if (a.mutate == "drop-norm-image") o.mutation = DLC_MUTATE_DROP_NORM_IMAGE;
  if (a.mutate == "mismatched-torus") o.mutation = DLC_MUTATE_MISMATCHED_TORUS;
  if (a.mutate == "bad-lift") o.mutation = DLC_MUTATE_BAD_LIFT;
  if (a.format.empty()) a.format = (dl->parsed() || tw->parsed() || lt->parsed()) ? "text" : "json";
  const dlc_format format = a.format == "tsv" ? DLC_FORMAT_TSV : a.format == "text" ? DLC_FORMAT_TEXT : DLC_FORMAT_JSON;

  dlc_session* session = nullptr;
  if (dlc_status st = dlc_session_create(&o, &session); st != DLC_OK) return report_error(st);
  struct Closer {
    dlc_session* s;
    ~Closer() { dlc_session_destroy(s); }
  } closer{session};

  char* text = nullptr;
  int verdict = kPass;
  dlc_status st = DLC_OK;
  bool ran = false;
  for (auto& [sub, check] : check_cmds) {
    if (!sub->parsed()) continue;
    int success = 0;
    st = dlc_run_check(session, check, format, &text, &success);
    if (st == DLC_OK && !success) verdict = kFail;
    ran = true;
  }
  if (!ran) {
    const char* part = partitions.empty() ? nullptr : partitions.c_str();
    if (dl->parsed()) st = dlc_dl_value(session, part, o.theta, a.element.c_str(), format, &text);
    if (tw->parsed()) st = dlc_twisted_value(session, part, o.theta, a.element.c_str(), a.full ? 1 : 0, format, &text);
    if (lt->parsed()) st = dlc_list_tori(session, format, &text);
  }
  if (st != DLC_OK) return report_error(st);
  const int w = write_output(a.out, text);
  dlc_free(text);
  return w != kPass ? w : verdict;
}

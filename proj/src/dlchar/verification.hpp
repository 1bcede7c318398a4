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
#ifndef DLCHAR_VERIFICATION_HPP
#define DLCHAR_VERIFICATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlchar/dl_characters.hpp"

namespace dlchar {

enum class ThetaSelection { kAll, kExplicit, kSample };

struct VerifyConfig {
  AutomorphismKind mode = AutomorphismKind::kFieldFrobenius;
  unsigned n = 2;
  unsigned q = 2;
  unsigned ell = 2;
  // Partitions for T; empty means every partition of n.  Ignored in
  // transpose-inverse mode, where T = SO_2.
  std::vector<std::vector<unsigned>> partitions;
  ThetaSelection theta_selection = ThetaSelection::kAll;
  std::vector<std::uint32_t> theta_exponents;  // for kExplicit
  // Under kAll, tori with more points than this get a seeded sample instead.
  std::size_t theta_all_limit = 100;
  std::size_t theta_sample_size = 16;
  // Explicit s~ list; empty means all points of the eps-stable torus family.
  std::vector<Mat> s_tilde;
  // eps-stable G~(k)-conjugates added per standard torus of the family.
  unsigned extra_conjugates = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  unsigned trials = 10;
  bool check_full_oracle = true;
};

struct CaseRecord {
  Mat s_tilde;
  std::string torus_T;
  std::vector<std::uint32_t> theta_exponents;
  std::string source_torus;  // eps-stable torus that supplied s~
  std::string torus_S;
  std::optional<CycloNumber> lhs, rhs, lhs_full;
  bool vacuous = false;
  bool match = false;
  std::string note;
  std::map<std::string, std::int64_t> counters;
};

struct VerifySummary {
  std::size_t total = 0, passed = 0, failed = 0, vacuous = 0;
};

struct VerifyReport {
  std::string check;  // "theorem", "normalizer", "vanishing", "counterexample", "lift"
  VerifyConfig config;
  ContextPtr context;
  std::vector<CaseRecord> cases;
  std::map<std::string, std::string> notes;  // echoed into the manifest
  std::uint64_t elements_scanned = 0;
  // Wall-clock seconds per phase; only filled (and emitted) on request.
  std::map<std::string, double> timings;

  VerifySummary summary() const;
  // No non-vacuous case at all.
  bool is_vacuous() const;
  // For "counterexample": some case has lhs != rhs.  Otherwise: no case failed.
  bool success() const;
};

// Mutation hooks used by the harness self-tests.
struct Mutation {
  bool drop_norm_image_point = false;  // normalizer: remove s from Im(N)
  bool mismatched_torus = false;       // vanishing: evaluate the RHS on a torus not conjugate to T
  bool non_normalizing_lift = false;   // lift: multiply each lift by an element leaving the transporter
};

ContextPtr make_context(const VerifyConfig& cfg);
// Tori T of G selected by the config.
std::vector<TorusPtr> target_tori(const ContextPtr& ctx, const VerifyConfig& cfg);
// Standard eps-stable tori of G~ plus eps-stable conjugates found by scan.
std::vector<TorusPtr> epsilon_stable_family(const ContextPtr& ctx, unsigned extra_conjugates);
std::vector<TorusCharacter> select_characters(const TorusPtr& T, const VerifyConfig& cfg);

VerifyReport verify_theorem(const VerifyConfig& cfg);
VerifyReport verify_normalizer_characterization(const VerifyConfig& cfg, const Mutation& mutation = {});
VerifyReport verify_vanishing(const VerifyConfig& cfg, const Mutation& mutation = {});
VerifyReport find_remark_counterexample(const VerifyConfig& cfg);
VerifyReport verify_lift_independence(const VerifyConfig& cfg, const Mutation& mutation = {});

}  // namespace dlchar

#endif  // DLCHAR_VERIFICATION_HPP

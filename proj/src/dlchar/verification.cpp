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
#include "dlchar/verification.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

struct Candidate {
  Mat s_tilde;
  std::string source;
};

std::vector<Candidate> candidates(const ContextPtr& ctx, const VerifyConfig& cfg, const std::vector<TorusPtr>& family,
                                  bool (*admit)(const GroupContext&, const Mat&)) {
  std::map<Mat, std::string> found;
  if (!cfg.s_tilde.empty()) {
    for (const auto& s : cfg.s_tilde) {
      if (!ctx->contains(s, false)) throw InvalidArgument("explicit s~ is not an invertible matrix of the right size");
      found.emplace(s, "explicit");
    }
  } else {
    for (const auto& S : family)
      for (const auto& s : S->points()) found.emplace(s, S->label());
  }
  std::vector<Candidate> out;
  for (const auto& [s, src] : found)
    if (admit(*ctx, s)) out.push_back({s, src});
  return out;
}

bool admissible(const GroupContext& ctx, const Mat& s) { return ctx.is_regular_semisimple(ctx.norm(s)); }

bool singular_norm(const GroupContext& ctx, const Mat& s) {
  return ctx.is_regular_semisimple(s) && !ctx.is_regular_semisimple(ctx.norm(s));
}

// Tori and transporters shared between cases, keyed by canonical hull bases.
class TorusCache {
 public:
  explicit TorusCache(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  TorusPtr source_torus(const Mat& s) {
    if (ctx_->kind() == AutomorphismKind::kTransposeInverse && ctx_->contains(s, true)) {
      if (!so2_) so2_ = orthogonal_torus(ctx_);
      if (so2_->contains(s)) return so2_;
    }
    const Mat gens[] = {s};
    auto key = Hull::generated_by(ctx_, gens, ctx_->base_degree()).basis();
    auto it = S_.find(key);
    if (it != S_.end()) return it->second;
    auto T = torus_of_regular_element(ctx_, s, TorusLevel::kFixed);
    S_.emplace(std::move(key), T);
    return T;
  }

  const Transporter& transporter(const TorusPtr& S, const TorusPtr& T, const TorusPtr& Tt, const WeylGroup& W) {
    auto key = std::make_pair(S.get(), T.get());
    auto it = X_.find(key);
    if (it == X_.end()) it = X_.emplace(key, weyl_transporter(S, T, Tt, W)).first;
    return it->second;
  }

 private:
  ContextPtr ctx_;
  TorusPtr so2_;
  std::map<std::vector<Mat>, TorusPtr> S_;
  std::map<std::pair<const RationalTorus*, const RationalTorus*>, Transporter> X_;
};

struct TargetData {
  TorusPtr T, T_tilde;
  std::vector<TwistedDLCharacter> chars;
};

std::vector<TargetData> prepare_targets(const ContextPtr& ctx, const VerifyConfig& cfg) {
  std::vector<TargetData> out;
  for (const auto& T : target_tori(ctx, cfg)) {
    TargetData d{T, centralizer_torus(T), {}};
    for (auto& theta : select_characters(T, cfg)) d.chars.emplace_back(std::move(theta), d.T_tilde);
    out.push_back(std::move(d));
  }
  return out;
}

VerifyReport start_report(const char* check, const VerifyConfig& cfg, ContextPtr ctx) {
  VerifyReport r;
  r.check = check;
  r.config = cfg;
  r.context = std::move(ctx);
  return r;
}

void finish(VerifyReport& r) { r.elements_scanned = r.context->elements_scanned(); }

}  // namespace

VerifySummary VerifyReport::summary() const {
  VerifySummary s;
  s.total = cases.size();
  for (const auto& c : cases) {
    if (c.vacuous)
      ++s.vacuous;
    else if (c.match)
      ++s.passed;
    else
      ++s.failed;
  }
  return s;
}

bool VerifyReport::is_vacuous() const {
  const auto s = summary();
  return s.total == s.vacuous;
}

bool VerifyReport::success() const {
  const auto s = summary();
  if (check == "counterexample") return s.failed > 0;
  return s.failed == 0;
}

ContextPtr make_context(const VerifyConfig& cfg) {
  auto ctx = GroupContext::create(cfg.mode, cfg.n, cfg.q, cfg.ell, cfg.budget);
  if (ctx->ambient_order() > cfg.budget)
    throw BudgetExceeded("|G~(k)| = " +
                         (ctx->ambient_order() == UINT64_MAX ? std::string(">2^64") : std::to_string(ctx->ambient_order())) +
                         " exceeds the budget " + std::to_string(cfg.budget));
  return ctx;
}

std::vector<TorusPtr> target_tori(const ContextPtr& ctx, const VerifyConfig& cfg) {
  if (ctx->kind() == AutomorphismKind::kTransposeInverse) return {orthogonal_torus(ctx)};
  auto parts = cfg.partitions.empty() ? partitions_of(ctx->n()) : cfg.partitions;
  std::vector<TorusPtr> out;
  for (const auto& p : parts) out.push_back(torus_from_partition(ctx, p, TorusLevel::kFixed));
  return out;
}

std::vector<TorusPtr> epsilon_stable_family(const ContextPtr& ctx, unsigned extra_conjugates) {
  std::vector<TorusPtr> base;
  if (ctx->kind() == AutomorphismKind::kTransposeInverse) {
    base.push_back(torus_from_partition(ctx, {1, 1}, TorusLevel::kAmbient));
    base.push_back(centralizer_torus(orthogonal_torus(ctx)));
  } else {
    for (const auto& p : partitions_of(ctx->n())) base.push_back(centralizer_torus(torus_from_partition(ctx, p)));
  }
  std::vector<TorusPtr> family;
  for (const auto& B : base) {
    if (!is_epsilon_invariant(*B)) throw InternalError("standard torus " + B->label() + " is not eps-stable");
    if (std::none_of(family.begin(), family.end(), [&](const TorusPtr& F) { return F->hull() == B->hull(); }))
      family.push_back(B);
  }
  if (extra_conjugates == 0) return family;
  const auto& group = ctx->elements(false);
  const std::size_t nbase = family.size();
  for (std::size_t b = 0; b < nbase; ++b) {
    const TorusPtr B = family[b];
    unsigned added = 0;
    std::uint64_t scanned = 0;
    for (const auto& g : group) {
      if (added >= extra_conjugates) break;
      ++scanned;
      Hull H = B->hull().conjugated(g);
      if (!(H.epsilon_image() == H)) continue;
      if (std::any_of(family.begin(), family.end(), [&](const TorusPtr& F) { return F->hull() == H; })) continue;
      auto C = conjugate_torus(B, g, B->label() + "'" + std::to_string(added + 1));
      if (!is_epsilon_invariant(*C)) continue;
      family.push_back(C);
      ++added;
    }
    ctx->count_scanned(scanned);
  }
  return family;
}

std::vector<TorusCharacter> select_characters(const TorusPtr& T, const VerifyConfig& cfg) {
  if (cfg.theta_selection == ThetaSelection::kExplicit) return {TorusCharacter(T, cfg.theta_exponents)};
  const std::size_t k = cfg.theta_sample_size;
  if (cfg.theta_selection == ThetaSelection::kAll && T->size() <= cfg.theta_all_limit) return TorusCharacter::all(T);
  if (k >= T->size()) return TorusCharacter::all(T);
  std::mt19937_64 rng(cfg.seed);
  std::set<std::vector<std::uint32_t>> picked;
  while (picked.size() < k) {
    std::vector<std::uint32_t> a;
    for (auto d : T->orders()) a.push_back(std::uniform_int_distribution<std::uint32_t>(0, d - 1)(rng));
    picked.insert(std::move(a));
  }
  std::vector<TorusCharacter> out;
  for (const auto& a : picked) out.emplace_back(T, a);
  return out;
}

VerifyReport verify_theorem(const VerifyConfig& cfg) {
  auto ctx = make_context(cfg);
  VerifyReport r = start_report("theorem", cfg, ctx);
  const auto family = epsilon_stable_family(ctx, cfg.extra_conjugates);
  const auto cands = candidates(ctx, cfg, family, admissible);
  TorusCache cache(ctx);
  for (const auto& target : prepare_targets(ctx, cfg)) {
    if (target.chars.empty()) continue;
    const WeylGroup& W = target.chars.front().base().weyl();
    for (const auto& c : cands) {
      const TorusPtr S = cache.source_torus(ctx->norm(c.s_tilde));
      const Transporter& X = cache.transporter(S, target.T, target.T_tilde, W);
      const TwistedProfile prof = twisted_profile_collapsed(target.T_tilde, c.s_tilde);
      std::optional<TwistedProfile> full;
      if (cfg.check_full_oracle) full = twisted_profile_full(target.T_tilde, c.s_tilde);
      for (const auto& chi : target.chars) {
        CaseRecord rec;
        rec.s_tilde = c.s_tilde;
        rec.torus_T = target.T->label();
        rec.theta_exponents = chi.theta().exponents();
        rec.source_torus = c.source;
        rec.torus_S = S->label();
        rec.lhs = evaluate_profile(chi.theta_tilde(), prof);
        rec.rhs = theorem_rhs(chi.base(), c.s_tilde, X);
        rec.match = *rec.lhs == *rec.rhs;
        if (full) {
          rec.lhs_full = evaluate_profile(chi.theta_tilde(), *full);
          if (!(*rec.lhs_full == *rec.lhs)) {
            rec.match = false;
            rec.note = "full and collapsed twisted values differ";
          }
        }
        rec.counters["transporter_cosets"] = std::int64_t(X.coset_representatives.size());
        rec.counters["weyl_orbits"] = std::int64_t(X.orbits.size());
        r.cases.push_back(std::move(rec));
      }
    }
  }
  finish(r);
  return r;
}

VerifyReport verify_normalizer_characterization(const VerifyConfig& cfg, const Mutation& mutation) {
  auto ctx = make_context(cfg);
  VerifyReport r = start_report("normalizer", cfg, ctx);
  const MatOps& ops = ctx->ops();
  const auto family = epsilon_stable_family(ctx, cfg.extra_conjugates);
  const auto cands = candidates(ctx, cfg, family, admissible);
  TorusCache cache(ctx);
  std::map<const RationalTorus*, std::vector<Mat>> left_cache;
  std::map<const RationalTorus*, std::set<Mat>> image_cache;
  std::map<const RationalTorus*, TorusPtr> tilde_keep;
  const auto& group = ctx->elements(false);
  for (const auto& c : cands) {
    const Mat s = ctx->norm(c.s_tilde);
    const TorusPtr S = cache.source_torus(s);
    auto lit = left_cache.find(S.get());
    if (lit == left_cache.end()) {
      lit = left_cache.emplace(S.get(), ctx->normalizer_of_set(S->points(), false)).first;
      const TorusPtr St = centralizer_torus(S);
      tilde_keep[S.get()] = St;
      std::set<Mat> image;
      for (const auto& t : St->points()) image.insert(ctx->norm(t));
      image_cache[S.get()] = std::move(image);
    }
    const std::vector<Mat>& left = lit->second;
    std::set<Mat> image = image_cache[S.get()];
    if (mutation.drop_norm_image_point) image.erase(s);
    std::vector<Mat> right;
    ctx->count_scanned(group.size());
    for (const auto& g : group)
      if (image.count(ops.conjugate(g, s))) right.push_back(g);

    std::vector<Mat> left_only, right_only;
    std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(left_only));
    std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(right_only));
    CaseRecord rec;
    rec.s_tilde = c.s_tilde;
    rec.source_torus = c.source;
    rec.torus_S = S->label();
    rec.torus_T = tilde_keep[S.get()]->label();
    rec.lhs = CycloNumber::integer(std::int64_t(left.size()));
    rec.rhs = CycloNumber::integer(std::int64_t(right.size()));
    rec.counters["left_only"] = std::int64_t(left_only.size());
    rec.counters["right_only"] = std::int64_t(right_only.size());
    rec.match = left_only.empty() && right_only.empty();
    r.cases.push_back(std::move(rec));
  }
  if (mutation.drop_norm_image_point) r.notes["mutation"] = "s removed from Im(N)";
  finish(r);
  return r;
}

VerifyReport verify_vanishing(const VerifyConfig& cfg, const Mutation& mutation) {
  auto ctx = make_context(cfg);
  VerifyReport r = start_report("vanishing", cfg, ctx);
  const auto family = epsilon_stable_family(ctx, cfg.extra_conjugates);
  const auto cands = candidates(ctx, cfg, family, admissible);
  const auto targets = prepare_targets(ctx, cfg);
  TorusCache cache(ctx);
  const auto& group = ctx->elements(false);
  for (const auto& target : targets) {
    if (target.chars.empty()) continue;
    const WeylGroup& W = target.chars.front().base().weyl();
    // A standard torus of G whose transporter to T is empty, for the mutation hook.
    std::optional<Transporter> mismatched;
    if (mutation.mismatched_torus) {
      for (const auto& other : targets) {
        Transporter X = weyl_transporter(other.T, target.T, target.T_tilde, W);
        if (X.empty()) {
          mismatched = std::move(X);
          break;
        }
      }
    }
    bool any = false;
    for (const auto& c : cands) {
      bool meets = false;
      ctx->count_scanned(group.size());
      for (const auto& h : group)
        if (target.T_tilde->contains(ctx->twisted_conjugate(h, c.s_tilde))) {
          meets = true;
          break;
        }
      if (meets) continue;
      any = true;
      const TorusPtr S = cache.source_torus(ctx->norm(c.s_tilde));
      const Transporter& X = cache.transporter(S, target.T, target.T_tilde, W);
      for (const auto& chi : target.chars) {
        CaseRecord rec;
        rec.s_tilde = c.s_tilde;
        rec.torus_T = target.T->label();
        rec.theta_exponents = chi.theta().exponents();
        rec.source_torus = c.source;
        rec.torus_S = S->label();
        rec.lhs = twisted_dl_value_collapsed(chi, c.s_tilde);
        if (mismatched) {
          rec.rhs = theorem_rhs(chi.base(), c.s_tilde, *mismatched, nullptr, false);
          rec.torus_S = mismatched->S->label();
          rec.note = "mutation: RHS over a torus not conjugate to T";
        } else {
          rec.rhs = theorem_rhs(chi.base(), c.s_tilde, X);
        }
        rec.counters["transporter_cosets"] = std::int64_t(X.coset_representatives.size());
        rec.match = rec.lhs->is_zero() && rec.rhs->is_zero();
        r.cases.push_back(std::move(rec));
      }
    }
    if (!any) {
      CaseRecord rec;
      rec.torus_T = target.T->label();
      rec.vacuous = true;
      rec.match = true;
      rec.note = "every admissible s~ is twisted-conjugate into T~(k)";
      r.cases.push_back(std::move(rec));
    }
  }
  finish(r);
  return r;
}

VerifyReport find_remark_counterexample(const VerifyConfig& cfg) {
  if (cfg.mode != AutomorphismKind::kTransposeInverse)
    throw InvalidArgument("the counterexample search runs in transpose-inverse mode");
  if (cfg.q > 7) throw InvalidArgument("the counterexample search supports odd q <= 7");
  auto ctx = make_context(cfg);
  VerifyReport r = start_report("counterexample", cfg, ctx);
  r.notes["s_convention"] =
      "S = T = SO_2(GF(q)): G is itself a torus, it is eps-stable, and it contains N(s~) = +-1";
  const auto family = epsilon_stable_family(ctx, cfg.extra_conjugates);
  const auto cands = candidates(ctx, cfg, family, singular_norm);
  for (const auto& target : prepare_targets(ctx, cfg)) {
    if (target.chars.empty()) continue;
    const WeylGroup& W = target.chars.front().base().weyl();
    const Transporter X = weyl_transporter(target.T, target.T, target.T_tilde, W);
    for (const auto& c : cands) {
      const TwistedProfile prof = twisted_profile_collapsed(target.T_tilde, c.s_tilde);
      std::optional<TwistedProfile> full;
      if (cfg.check_full_oracle) full = twisted_profile_full(target.T_tilde, c.s_tilde);
      for (const auto& chi : target.chars) {
        CaseRecord rec;
        rec.s_tilde = c.s_tilde;
        rec.torus_T = target.T->label();
        rec.theta_exponents = chi.theta().exponents();
        rec.source_torus = c.source;
        rec.torus_S = target.T->label();
        rec.lhs = evaluate_profile(chi.theta_tilde(), prof);
        rec.rhs = theorem_rhs(chi.base(), c.s_tilde, X, nullptr, false);
        rec.match = *rec.lhs == *rec.rhs;
        if (full) {
          rec.lhs_full = evaluate_profile(chi.theta_tilde(), *full);
          if (!(*rec.lhs_full == *rec.lhs)) throw InternalError("full and collapsed twisted values differ");
        }
        if (!rec.match) rec.note = "counterexample: s~ regular, N(s~) singular, LHS != RHS";
        r.cases.push_back(std::move(rec));
      }
    }
  }
  finish(r);
  return r;
}

VerifyReport verify_lift_independence(const VerifyConfig& cfg, const Mutation& mutation) {
  auto ctx = make_context(cfg);
  VerifyReport r = start_report("lift", cfg, ctx);
  const MatOps& ops = ctx->ops();
  const auto family = epsilon_stable_family(ctx, cfg.extra_conjugates);
  const auto cands = candidates(ctx, cfg, family, admissible);
  TorusCache cache(ctx);
  std::mt19937_64 rng(cfg.seed);
  const auto& group = ctx->elements(false);
  for (const auto& target : prepare_targets(ctx, cfg)) {
    if (target.chars.empty()) continue;
    const WeylGroup& W = target.chars.front().base().weyl();
    for (const auto& c : cands) {
      const TorusPtr S = cache.source_torus(ctx->norm(c.s_tilde));
      const Transporter& X = cache.transporter(S, target.T, target.T_tilde, W);
      LiftChooser random_lift = [&](std::size_t, const std::vector<Mat>& elems) {
        Mat w = elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
        if (mutation.non_normalizing_lift) {
          for (const auto& y : group) {
            const Mat wy = ops.mul(w, y);
            if (!transports(wy, *S, *target.T)) return wy;
          }
        }
        return w;
      };
      for (const auto& chi : target.chars) {
        CaseRecord rec;
        rec.s_tilde = c.s_tilde;
        rec.torus_T = target.T->label();
        rec.theta_exponents = chi.theta().exponents();
        rec.source_torus = c.source;
        rec.torus_S = S->label();
        rec.rhs = theorem_rhs(chi.base(), c.s_tilde, X);
        rec.match = true;
        std::int64_t distinct = 0;
        for (unsigned t = 0; t < cfg.trials; ++t) {
          try {
            CycloNumber v = theorem_rhs(chi.base(), c.s_tilde, X, random_lift);
            if (!(v == *rec.rhs)) {
              ++distinct;
              rec.match = false;
              rec.lhs = v;
            }
          } catch (const ContractViolation& e) {
            rec.match = false;
            rec.note = std::string("contract violation: ") + e.what();
            ++rec.counters["violations"];
          }
        }
        if (!rec.lhs) rec.lhs = rec.rhs;
        rec.counters["trials"] = cfg.trials;
        rec.counters["differing_trials"] = distinct;
        r.cases.push_back(std::move(rec));
      }
    }
  }
  if (mutation.non_normalizing_lift) r.notes["mutation"] = "lifts multiplied by an element leaving the transporter";
  finish(r);
  return r;
}

}  // namespace dlchar

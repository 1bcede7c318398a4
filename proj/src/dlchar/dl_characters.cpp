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
#include "dlchar/dl_characters.hpp"

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

CycloNumber sum_of_powers(std::uint32_t conductor, const std::vector<std::int64_t>& counts) {
  return CycloNumber::from_power_counts(conductor, counts);
}

// An element g eps^i of G~(k) x| <eps>.
struct SemiElem {
  Mat g;
  std::int64_t i;
};

SemiElem semi_mul(const GroupContext& ctx, const SemiElem& a, const SemiElem& b) {
  const std::int64_t l = ctx.ell();
  return {ctx.ops().mul(a.g, ctx.apply_automorphism(b.g, a.i)), ((a.i + b.i) % l + l) % l};
}

SemiElem semi_inv(const GroupContext& ctx, const SemiElem& a) {
  const std::int64_t l = ctx.ell();
  return {ctx.apply_automorphism(ctx.ops().inverse(a.g), -a.i), ((l - a.i) % l + l) % l};
}

void check_twisted_input(const GroupContext& ctx, const Mat& x) {
  if (!ctx.contains(x, false)) throw PreconditionViolated("element is not in the ambient group");
  if (!ctx.is_regular_semisimple(ctx.norm(x))) throw PreconditionViolated("norm of the element is not regular semisimple");
}

}  // namespace

DLCharacter::DLCharacter(TorusCharacter theta) : theta_(std::move(theta)) {
  if (torus()->level() != TorusLevel::kFixed) throw InvalidArgument("DL character needs a torus of the fixed group");
  weyl_ = std::make_shared<const WeylGroup>(weyl_group(torus(), true));
}

TwistedDLCharacter::TwistedDLCharacter(TorusCharacter theta, TorusPtr T_tilde)
    : base_(std::move(theta)),
      theta_tilde_(compose_with_norm(base_.theta(), T_tilde ? T_tilde : centralizer_torus(base_.torus()))) {
  if (!is_epsilon_invariant(*torus_tilde())) throw PreconditionViolated("torus " + torus_tilde()->label() + " is not eps-stable");
  if (!is_epsilon_invariant(theta_tilde_)) throw PreconditionViolated("norm-composed character is not eps-invariant");
}

CycloNumber dl_value(const DLCharacter& chi, const Mat& x, bool check) {
  const GroupContext& ctx = *chi.context();
  const MatOps& ops = ctx.ops();
  if (!ctx.contains(x, true)) throw PreconditionViolated("element is not in the fixed group");
  if (check && !(ctx.kind() == AutomorphismKind::kTransposeInverse ? ctx.is_regular_in_fixed_subgroup(x)
                                                                   : ctx.is_regular_semisimple(x)))
    throw PreconditionViolated("element is not regular semisimple");

  const RationalTorus& T = *chi.torus();
  const auto& group = ctx.elements(true);
  std::optional<Mat> conj;
  std::uint64_t scanned = 0;
  for (const auto& g : group) {
    ++scanned;
    const Mat y = ops.conjugate(g, x);
    if (T.contains(y)) {
      conj = y;
      break;
    }
  }
  ctx.count_scanned(scanned);
  const std::uint32_t N = chi.theta().conductor();
  if (!conj) return CycloNumber::zero(N);
  std::vector<std::int64_t> counts(N, 0);
  for (const auto& v : chi.weyl().representatives) ++counts[chi.theta().exponent_at(ops.conjugate(v, *conj))];
  return sum_of_powers(N, counts);
}

TwistedProfile twisted_profile_collapsed(const TorusPtr& T_tilde, const Mat& x) {
  const GroupContext& ctx = *T_tilde->context();
  const MatOps& ops = ctx.ops();
  TwistedProfile prof{std::vector<std::int64_t>(T_tilde->size(), 0), T_tilde->size()};
  const auto& group = ctx.elements(false);
  ctx.count_scanned(group.size());
  for (const auto& g : group) {
    const Mat y = ops.mul(ops.mul(ops.inverse(g), x), ctx.apply_automorphism(g, 1));
    if (auto idx = T_tilde->index_of(y)) ++prof.counts[*idx];
  }
  return prof;
}

TwistedProfile twisted_profile_full(const TorusPtr& T_tilde, const Mat& x) {
  const GroupContext& ctx = *T_tilde->context();
  const std::uint64_t l = ctx.ell();
  TwistedProfile prof{std::vector<std::int64_t>(T_tilde->size(), 0), l * T_tilde->size()};
  const SemiElem xe{x, 1 % std::int64_t(l)};
  const auto& group = ctx.elements(false);
  ctx.count_scanned(group.size() * l);
  for (const auto& g : group) {
    for (std::int64_t i = 0; i < std::int64_t(l); ++i) {
      const SemiElem h{g, i};
      const SemiElem y = semi_mul(ctx, semi_mul(ctx, semi_inv(ctx, h), xe), h);
      if (y.i != xe.i) throw InternalError("conjugation changed the <eps>-component");
      if (auto idx = T_tilde->index_of(y.g)) ++prof.counts[*idx];
    }
  }
  return prof;
}

CycloNumber evaluate_profile(const TorusCharacter& theta_tilde, const TwistedProfile& profile) {
  const std::uint32_t N = theta_tilde.conductor();
  std::vector<std::int64_t> counts(N, 0);
  for (std::uint32_t idx = 0; idx < profile.counts.size(); ++idx)
    if (profile.counts[idx]) counts[theta_tilde.exponent_at_index(idx)] += profile.counts[idx];
  CycloNumber v = sum_of_powers(N, counts) / mpq_class(std::to_string(profile.divisor));
  if (!v.is_integral()) throw InternalError("twisted character value is not an algebraic integer: " + v.to_string());
  return v;
}

CycloNumber twisted_dl_value_collapsed(const TwistedDLCharacter& chi, const Mat& x, bool check) {
  if (check) check_twisted_input(*chi.context(), x);
  return evaluate_profile(chi.theta_tilde(), twisted_profile_collapsed(chi.torus_tilde(), x));
}

CycloNumber twisted_dl_value_full(const TwistedDLCharacter& chi, const Mat& x, bool check) {
  if (check) check_twisted_input(*chi.context(), x);
  return evaluate_profile(chi.theta_tilde(), twisted_profile_full(chi.torus_tilde(), x));
}

CycloNumber theorem_rhs(const DLCharacter& chi, const Mat& s_tilde, const Transporter& X, const LiftChooser& chooser,
                        bool check) {
  const GroupContext& ctx = *chi.context();
  const MatOps& ops = ctx.ops();
  if (X.T != chi.torus()) throw InvalidArgument("transporter target differs from the character's torus");
  const Mat s = ctx.norm(s_tilde);
  if (check) {
    if (!ctx.is_regular_semisimple(s)) throw PreconditionViolated("N(s~) is not regular semisimple");
    if (!X.S->contains(s)) throw PreconditionViolated("N(s~) is not a point of the source torus");
  }
  CycloNumber total = CycloNumber::zero(chi.theta().conductor());
  for (std::size_t o = 0; o < X.orbits.size(); ++o) {
    Mat w = X.coset_representatives[X.orbits[o].front()];
    if (chooser) w = chooser(o, X.orbit_elements(o));
    if (!transports(w, *X.S, *X.T)) throw ContractViolation("lift does not transport S onto T");
    total += dl_value(chi, ops.conjugate(w, s), check);
  }
  return total;
}

}  // namespace dlchar

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
#include "dlchar/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "dlchar/errors.hpp"

namespace dlchar {

bool transports(const Mat& g, const RationalTorus& S, const RationalTorus& T) {
  if (S.size() != T.size() || !S.hull().conjugates_onto(g, T.hull())) return false;
  const MatOps& ops = S.context()->ops();
  const Mat gi = ops.inverse(g);
  for (const auto& t : S.points())
    if (!T.contains(ops.mul(ops.mul(g, t), gi))) return false;
  return true;
}

WeylGroup weyl_group(const TorusPtr& T, bool fixed) {
  const GroupContext& ctx = *T->context();
  const MatOps& ops = ctx.ops();
  WeylGroup W{T, fixed, {}, {}};
  const auto& all = ctx.elements(fixed);
  ctx.count_scanned(all.size());
  for (const auto& g : all)
    if (transports(g, *T, *T)) W.normalizer.push_back(g);

  std::vector<char> used(W.normalizer.size(), 0);
  for (std::size_t i = 0; i < W.normalizer.size(); ++i) {
    if (used[i]) continue;
    W.representatives.push_back(W.normalizer[i]);
    for (const auto& t : T->points()) {
      const Mat gt = ops.mul(W.normalizer[i], t);
      auto it = std::lower_bound(W.normalizer.begin(), W.normalizer.end(), gt);
      if (it == W.normalizer.end() || !(*it == gt)) throw InternalError("torus normalizer is not a union of cosets");
      used[std::size_t(it - W.normalizer.begin())] = 1;
    }
  }
  return W;
}

std::optional<std::uint32_t> Transporter::index_of(const Mat& g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || !(*it == g)) return std::nullopt;
  return std::uint32_t(it - elements.begin());
}

std::vector<Mat> Transporter::orbit_elements(std::size_t o) const {
  std::vector<Mat> out;
  const auto& cosets = orbits.at(o);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (std::binary_search(cosets.begin(), cosets.end(), coset_of[i])) out.push_back(elements[i]);
  return out;
}

Transporter weyl_transporter(const TorusPtr& S, const TorusPtr& T, const TorusPtr& T_tilde, const WeylGroup& W_T) {
  const GroupContext& ctx = *T->context();
  const MatOps& ops = ctx.ops();
  if (!W_T.fixed || W_T.torus != T) throw InvalidArgument("Weyl group does not belong to the target torus");
  Transporter X{S, T, T_tilde, {}, {}, {}, {}};
  const auto& all = ctx.elements(false);
  ctx.count_scanned(all.size());
  for (const auto& g : all)
    if (transports(g, *S, *T)) X.elements.push_back(g);

  constexpr std::uint32_t kUnset = UINT32_MAX;
  X.coset_of.assign(X.elements.size(), kUnset);
  for (std::size_t i = 0; i < X.elements.size(); ++i) {
    if (X.coset_of[i] != kUnset) continue;
    const auto c = std::uint32_t(X.coset_representatives.size());
    X.coset_representatives.push_back(X.elements[i]);
    for (const auto& t : T_tilde->points()) {
      auto j = X.index_of(ops.mul(t, X.elements[i]));
      if (!j) throw InternalError("transporter is not a union of T~(k)-cosets");
      X.coset_of[*j] = c;
    }
  }

  // Orbits of the left action of N_{G(k)}(T) on the cosets.
  const std::size_t m = X.coset_representatives.size();
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t c = 0; c < m; ++c) {
    for (const auto& v : W_T.normalizer) {
      auto j = X.index_of(ops.mul(v, X.coset_representatives[c]));
      if (!j) throw InternalError("Weyl group action leaves the transporter");
      const auto a = find(c), b = find(X.coset_of[*j]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::int64_t> slot(m, -1);
  for (std::uint32_t c = 0; c < m; ++c) {
    const auto r = find(c);
    if (slot[r] < 0) {
      slot[r] = std::int64_t(X.orbits.size());
      X.orbits.emplace_back();
    }
    X.orbits[std::size_t(slot[r])].push_back(c);
  }
  return X;
}

}  // namespace dlchar

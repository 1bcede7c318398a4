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
#include "dlchar/group_context.hpp"

#include <algorithm>
#include <unordered_set>

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

std::uint64_t gl_order(unsigned n, std::uint64_t Q) {
  unsigned __int128 qn = 1;
  for (unsigned i = 0; i < n; ++i) {
    qn *= Q;
    if (qn > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
  }
  unsigned __int128 total = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= (qn - qi);
    if (total > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    qi *= Q;
  }
  return std::uint64_t(total);
}

}  // namespace

std::shared_ptr<const GroupContext> GroupContext::create(AutomorphismKind kind, unsigned n, unsigned q, unsigned ell,
                                                         std::uint64_t budget) {
  if (n < 1 || n > kMaxDim) throw InvalidArgument("matrix size n must be between 1 and " + std::to_string(kMaxDim));
  if (ell < 1) throw InvalidArgument("automorphism order ell must be positive");
  if (q < 2) throw InvalidArgument("q must be a prime power");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned a = 0;
  for (unsigned v = q; v > 1; v /= p) {
    if (v % p != 0) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    ++a;
  }

  std::shared_ptr<GroupContext> ctx(new GroupContext());
  ctx->n_ = n;
  ctx->q_ = q;
  ctx->p_ = p;
  ctx->base_degree_ = a;
  ctx->budget_ = budget;
  ctx->auto_ = {kind, ell};

  if (kind == AutomorphismKind::kTransposeInverse) {
    if (n != 2) throw InvalidArgument("transpose-inverse mode supports n = 2 only");
    if (p == 2) throw InvalidArgument("transpose-inverse mode requires odd characteristic");
    if (ell != 2) throw InvalidArgument("transpose-inverse automorphism has order 2");
    ctx->ambient_degree_ = a;
  } else {
    ctx->ambient_degree_ = a * ell;
  }

  std::uint64_t ambient_size = 1;
  for (unsigned i = 0; i < ctx->ambient_degree_; ++i) {
    ambient_size *= p;
    if (ambient_size > kMaxFieldSize)
      throw BudgetExceeded("ambient field GF(" + std::to_string(p) + "^" + std::to_string(ctx->ambient_degree_) +
                           ") exceeds the field-size cap");
  }

  // Torus blocks of G and of G~ need GF(q^j) and GF(q^(ell j)) for j <= n;
  // register those that fit.
  std::set<unsigned> degrees{a, ctx->ambient_degree_};
  for (unsigned base : {a, ctx->ambient_degree_}) {
    std::uint64_t size = 1;
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned i = 0; i < base && size <= kMaxFieldSize; ++i) size *= p;
      if (size > kMaxFieldSize) break;
      degrees.insert(base * j);
    }
  }
  ctx->tower_ = FieldTower::build(p, degrees);
  ctx->ops_ = MatOps(ctx->ambient_field(), n);

  const Field& base = ctx->base_field();
  for (Elem c = 0; c < base.size(); ++c) ctx->base_alphabet_.push_back(ctx->tower_->embed(c, a, ctx->ambient_degree_));
  std::sort(ctx->base_alphabet_.begin(), ctx->base_alphabet_.end());
  return ctx;
}

std::uint64_t GroupContext::ambient_order() const { return gl_order(n_, ambient_field().size()); }

std::uint64_t GroupContext::fixed_order() const {
  if (auto_.kind == AutomorphismKind::kTransposeInverse) return q_ % 4 == 1 ? q_ - 1 : q_ + 1;
  return gl_order(n_, q_);
}

const std::vector<Mat>& GroupContext::elements(bool fixed) const {
  const int slot = fixed ? 1 : 0;
  std::call_once(once_[slot], [&] { cache_[slot] = enumerate(fixed); });
  return cache_[slot];
}

std::vector<Mat> GroupContext::enumerate(bool fixed) const {
  const std::uint64_t expected = order(fixed);
  if (expected > budget_)
    throw BudgetExceeded("group of order " + (expected == UINT64_MAX ? std::string(">2^64") : std::to_string(expected)) +
                         " exceeds enumeration budget " + std::to_string(budget_));
  std::vector<Mat> out;
  out.reserve(expected);
  if (fixed && auto_.kind == AutomorphismKind::kFieldFrobenius) {
    ops_.for_each_invertible(base_alphabet_, [&](const Mat& g) { out.push_back(g); });
  } else {
    std::vector<Elem> alphabet(ambient_field().size());
    for (Elem c = 0; c < alphabet.size(); ++c) alphabet[c] = c;
    ops_.for_each_invertible(alphabet, [&](const Mat& g) {
      if (!fixed || contains(g, true)) out.push_back(g);
    });
  }
  if (out.size() != expected)
    throw InternalError("enumerated " + std::to_string(out.size()) + " elements, expected " + std::to_string(expected));
  return out;
}

bool GroupContext::contains(const Mat& g, bool fixed) const {
  if (g.n != n_) return false;
  if (!ops_.invertible(g)) return false;
  if (!fixed) return true;
  if (auto_.kind == AutomorphismKind::kFieldFrobenius) return is_base_matrix(g);
  return ops_.mul(g, ops_.transpose(g)) == ops_.identity() && ops_.det(g) == 1;
}

Elem GroupContext::embed_base(Elem code_in_base) const { return tower_->embed(code_in_base, base_degree_, ambient_degree_); }

std::optional<Elem> GroupContext::to_base(Elem ambient_code) const {
  return tower_->restrict(ambient_code, ambient_degree_, base_degree_);
}

bool GroupContext::is_base_matrix(const Mat& g) const {
  for (unsigned k = 0; k < g.entries(); ++k)
    if (!std::binary_search(base_alphabet_.begin(), base_alphabet_.end(), Elem(g.a[k]))) return false;
  return true;
}

Mat GroupContext::apply_automorphism(const Mat& g, std::int64_t exponent) const {
  const std::int64_t l = auto_.order;
  std::int64_t e = exponent % l;
  if (e < 0) e += l;
  if (e == 0) return g;
  if (auto_.kind == AutomorphismKind::kFieldFrobenius) return ops_.frobenius(g, e * base_degree_);
  if (!ops_.invertible(g)) throw InvalidArgument("transpose-inverse of a singular matrix");
  return ops_.transpose(ops_.inverse(g));
}

Mat GroupContext::apply_to_algebra(const Mat& x, std::int64_t exponent) const {
  const std::int64_t l = auto_.order;
  std::int64_t e = exponent % l;
  if (e < 0) e += l;
  if (e == 0) return x;
  if (auto_.kind == AutomorphismKind::kFieldFrobenius) return ops_.frobenius(x, e * base_degree_);
  return ops_.transpose(x);
}

Mat GroupContext::norm(const Mat& g) const {
  if (!ops_.invertible(g)) throw InvalidArgument("norm of a singular matrix");
  Mat r = g;
  for (unsigned i = 1; i < auto_.order; ++i) r = ops_.mul(r, apply_automorphism(g, i));
  return r;
}

Mat GroupContext::twisted_conjugate(const Mat& h, const Mat& g) const {
  return ops_.mul(ops_.mul(h, g), ops_.inverse(apply_automorphism(h, 1)));
}

bool GroupContext::is_regular_semisimple(const Mat& g) const {
  if (!ops_.invertible(g)) throw InvalidArgument("regularity test needs an invertible matrix");
  const Field& F = ambient_field();
  Poly f = ops_.charpoly(g);
  Poly g1 = poly_gcd(F, f, poly_derivative(F, f));
  return g1.size() == 1;
}

bool GroupContext::is_regular_in_fixed_subgroup(const Mat& g) const {
  if (auto_.kind == AutomorphismKind::kTransposeInverse) return contains(g, true);
  return is_regular_semisimple(g);
}

std::vector<Mat> GroupContext::centralizer(const Mat& g, bool fixed) const {
  const auto& all = elements(fixed);
  count_scanned(all.size());
  std::vector<Mat> out;
  const Mat& x = g;
  for (const auto& h : all)
    if (ops_.commute(h, x)) out.push_back(h);
  return out;
}

std::vector<Mat> GroupContext::normalizer_of_set(std::span<const Mat> set, bool fixed) const {
  std::unordered_set<Mat> members(set.begin(), set.end());
  const auto& all = elements(fixed);
  count_scanned(all.size());
  std::vector<Mat> out;
  for (const auto& g : all) {
    const Mat gi = ops_.inverse(g);
    bool ok = true;
    for (const auto& s : set) {
      if (!members.count(ops_.mul(ops_.mul(g, s), gi))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

std::string GroupContext::describe() const {
  const std::string big = "GF(" + std::to_string(p_) + "^" + std::to_string(ambient_degree_) + ")";
  const std::string small = "GF(" + std::to_string(q_) + ")";
  const std::string gl = "GL_" + std::to_string(n_);
  if (auto_.kind == AutomorphismKind::kTransposeInverse)
    return gl + "(" + small + ") with eps(g) = (g^t)^-1, fixed group SO_2(" + small + ")";
  return gl + "(" + big + ") with eps = x -> x^" + std::to_string(q_) + " of order " + std::to_string(auto_.order) +
         ", fixed group " + gl + "(" + small + ")";
}

}  // namespace dlchar

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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dlchar/errors.hpp"
#include "dlchar/group_context.hpp"
#include "oracles.hpp"

using namespace dlchar;

namespace {

const auto kFrob = AutomorphismKind::kFieldFrobenius;
const auto kTI = AutomorphismKind::kTransposeInverse;

Mat mat(unsigned n, std::initializer_list<Elem> codes) {
  Mat m(n);
  unsigned k = 0;
  for (Elem c : codes) m.a[k++] = std::uint16_t(c);
  return m;
}

// Leibniz determinant over the polynomial oracle field, n <= 3.
std::uint32_t oracle_det(const oracle::PolyField& F, unsigned p, const Mat& m) {
  std::vector<unsigned> perm(m.n);
  for (unsigned i = 0; i < m.n; ++i) perm[i] = i;
  std::uint32_t total = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < m.n; ++i)
      for (unsigned j = i + 1; j < m.n; ++j) inversions += perm[i] > perm[j];
    std::uint32_t term = 1;
    for (unsigned i = 0; i < m.n; ++i) term = F.mul(term, m(i, perm[i]));
    if (inversions % 2) term = F.mul(term, p - 1);
    total = F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("group orders match an independent count") {
  struct C {
    unsigned n, q, ell;
    std::uint64_t expected;
  };
  for (auto c : {C{2, 2, 1, 6}, C{2, 2, 2, 180}, C{1, 3, 2, 8}, C{2, 3, 1, 48}}) {
    auto ctx = GroupContext::create(kFrob, c.n, c.q, c.ell);
    CHECK(ctx->elements(false).size() == c.expected);
    CHECK(ctx->ambient_order() == c.expected);
    const Field& F = ctx->ambient_field();
    oracle::PolyField P(F.characteristic(), F.modulus());
    std::uint64_t count = 0, total = 1;
    for (unsigned i = 0; i < c.n * c.n; ++i) total *= F.size();
    for (std::uint64_t code = 0; code < total; ++code) {
      Mat m(c.n);
      std::uint64_t r = code;
      for (unsigned k = 0; k < c.n * c.n; ++k, r /= F.size()) m.a[k] = std::uint16_t(r % F.size());
      if (oracle_det(P, F.characteristic(), m) != 0) ++count;
    }
    CHECK(count == c.expected);
  }
  auto g = GroupContext::create(kFrob, 2, 2, 2);
  CHECK(g->elements(true).size() == 6);
  CHECK(std::is_sorted(g->elements(false).begin(), g->elements(false).end()));
}

TEST_CASE("SO_2 fixed groups") {
  for (auto [q, expected] : std::vector<std::pair<unsigned, std::size_t>>{{3, 4}, {5, 4}, {7, 8}, {9, 8}}) {
    auto ctx = GroupContext::create(kTI, 2, q, 2);
    const auto& G = ctx->elements(true);
    CHECK(G.size() == expected);
    for (const auto& g : G) {
      CHECK(ctx->apply_automorphism(g, 1) == g);
      CHECK(ctx->ops().det(g) == 1);
    }
  }
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(GroupContext::create(kTI, 3, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(GroupContext::create(kTI, 2, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(GroupContext::create(kTI, 2, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(GroupContext::create(kFrob, 2, 6, 2), InvalidArgument);
  CHECK_THROWS_AS(GroupContext::create(kFrob, 0, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(GroupContext::create(kFrob, 2, 11, 5), BudgetExceeded);
  auto big = GroupContext::create(kFrob, 3, 11, 3, 1000);
  CHECK_THROWS_AS(big->elements(false), BudgetExceeded);
}

TEST_CASE("automorphisms") {
  auto ctx = GroupContext::create(kFrob, 2, 2, 2);
  const Field& F = ctx->ambient_field();
  for (const auto& g : ctx->elements(false)) {
    const Mat e = ctx->apply_automorphism(g, 1);
    for (unsigned k = 0; k < 4; ++k) CHECK(e.a[k] == F.mul(g.a[k], g.a[k]));
    CHECK(ctx->apply_automorphism(g, 2) == g);
    CHECK(ctx->apply_automorphism(g, -1) == e);
  }
  auto ti = GroupContext::create(kTI, 2, 3, 2);
  const Mat d = mat(2, {1, 0, 0, 2});
  CHECK(ti->apply_automorphism(d, 1) == d);
  const Mat u = mat(2, {1, 1, 0, 1});
  CHECK(ti->apply_automorphism(u, 1) == mat(2, {1, 0, 2, 1}));
  CHECK(ti->apply_automorphism(u, 2) == u);
  CHECK_THROWS_AS(ti->apply_automorphism(mat(2, {1, 1, 1, 1}), 1), InvalidArgument);
}

TEST_CASE("norm map") {
  auto c1 = GroupContext::create(kFrob, 1, 2, 2);
  const Mat w = mat(1, {c1->ambient_field().generator()});
  CHECK(c1->norm(w) == c1->ops().identity());

  auto ti = GroupContext::create(kTI, 2, 3, 2);
  for (const auto& g : ti->elements(false))
    if (g == ti->ops().transpose(g)) CHECK(ti->norm(g) == ti->ops().identity());

  auto ctx = GroupContext::create(kFrob, 2, 2, 3);
  for (const auto& g : ctx->elements(true)) CHECK(ctx->norm(g) == ctx->ops().pow(g, 3));
}

TEST_CASE("norm equivariance and eps(N(g)) = g^-1 N(g) g, exhaustive on GL_2(GF(4))") {
  auto ctx = GroupContext::create(kFrob, 2, 2, 2);
  const MatOps& ops = ctx->ops();
  const auto& G = ctx->elements(false);
  for (const auto& g : G) {
    const Mat N = ctx->norm(g);
    CHECK(ctx->apply_automorphism(N, 1) == ops.mul(ops.mul(ops.inverse(g), N), g));
    CHECK(ctx->twisted_conjugate(ops.identity(), g) == g);
    for (const auto& h : G) REQUIRE(ctx->norm(ctx->twisted_conjugate(h, g)) == ops.conjugate(h, N));
  }
  auto ti = GroupContext::create(kTI, 2, 5, 2);
  const auto& H = ti->elements(false);
  for (std::size_t i = 0; i < H.size(); i += 37)
    for (std::size_t j = 0; j < H.size(); j += 41)
      REQUIRE(ti->norm(ti->twisted_conjugate(H[i], H[j])) == ti->ops().conjugate(H[i], ti->norm(H[j])));
}

TEST_CASE("twisted conjugation in GL_1 is h g h^-q") {
  auto ctx = GroupContext::create(kFrob, 1, 3, 2);
  const Field& F = ctx->ambient_field();
  for (const auto& h : ctx->elements(false))
    for (const auto& g : ctx->elements(false))
      CHECK(ctx->twisted_conjugate(h, g).a[0] == F.mul(F.mul(h.a[0], g.a[0]), F.inv(F.pow(h.a[0], 3))));
}

TEST_CASE("regular semisimple test") {
  auto c3 = GroupContext::create(kFrob, 2, 3, 1);
  CHECK_FALSE(c3->is_regular_semisimple(mat(2, {1, 0, 0, 1})));
  CHECK(c3->is_regular_semisimple(mat(2, {1, 0, 0, 2})));
  CHECK_FALSE(c3->is_regular_semisimple(mat(2, {1, 1, 0, 1})));  // unipotent: repeated eigenvalue
  auto c2 = GroupContext::create(kFrob, 2, 2, 1);
  CHECK(c2->is_regular_semisimple(mat(2, {0, 1, 1, 1})));  // companion of x^2 + x + 1
}

TEST_CASE("centralizers") {
  auto c3 = GroupContext::create(kFrob, 2, 3, 1);
  const auto C = c3->centralizer(mat(2, {1, 0, 0, 2}), true);
  CHECK(C.size() == 4);
  for (const auto& g : C) CHECK((g(0, 1) == 0 && g(1, 0) == 0));
  CHECK(c3->centralizer(mat(2, {2, 0, 0, 2}), true).size() == 48);
  auto c2 = GroupContext::create(kFrob, 2, 2, 1);
  CHECK(c2->centralizer(mat(2, {0, 1, 1, 1}), true).size() == 3);
}

TEST_CASE("normalizers of point sets") {
  auto c3 = GroupContext::create(kFrob, 2, 3, 1);
  std::vector<Mat> diag;
  for (const auto& g : c3->elements(true))
    if (g(0, 1) == 0 && g(1, 0) == 0) diag.push_back(g);
  REQUIRE(diag.size() == 4);
  const auto N = c3->normalizer_of_set(diag, true);
  CHECK(N.size() == 8);
  for (const auto& g : N) CHECK(((g(0, 1) == 0) == (g(1, 0) == 0)));
  const Mat one[] = {c3->ops().identity()};
  CHECK(c3->normalizer_of_set(one, true).size() == 48);
  CHECK(c3->normalizer_of_set(c3->elements(true), true).size() == 48);
}

TEST_CASE("regular elements have abelian centralizers") {
  for (auto [q, ell] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto ctx = GroupContext::create(kFrob, 2, q, ell);
    for (const auto& g : ctx->elements(false)) {
      if (!ctx->is_regular_semisimple(g)) continue;
      const auto C = ctx->centralizer(g, false);
      for (const auto& x : C)
        for (const auto& y : C) REQUIRE(ctx->ops().commute(x, y));
    }
  }
}

TEST_CASE("enumeration budget counter") {
  auto ctx = GroupContext::create(kFrob, 2, 2, 2);
  const auto before = ctx->elements_scanned();
  ctx->centralizer(ctx->ops().identity(), false);
  CHECK(ctx->elements_scanned() == before + 180);
}

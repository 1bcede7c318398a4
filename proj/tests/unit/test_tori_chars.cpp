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

#include <random>
#include <set>

#include "dlchar/errors.hpp"
#include "dlchar/torus.hpp"
#include "dlchar/weyl.hpp"
#include "oracles.hpp"

using namespace dlchar;

namespace {

const auto kFrob = AutomorphismKind::kFieldFrobenius;
const auto kTI = AutomorphismKind::kTransposeInverse;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// prod (q^{lambda_i} - 1)
std::uint64_t partition_torus_order(unsigned q, const std::vector<unsigned>& lambda) {
  std::uint64_t r = 1;
  for (unsigned d : lambda) r *= ipow(q, d) - 1;
  return r;
}

std::uint64_t element_order(const MatOps& ops, const Mat& g) {
  std::uint64_t k = 1;
  for (Mat x = g; !(x == ops.identity()); x = ops.mul(x, g)) ++k;
  return k;
}

CycloNumber random_cyclo(std::mt19937& rng, std::uint32_t N) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<mpq_class> c(euler_phi(N));
  for (auto& x : c) x = mpq_class(d(rng), 1 + (d(rng) + 5) % 3);
  return CycloNumber::from_coefficients(N, c);
}

}  // namespace

TEST_CASE("partitions and labels") {
  CHECK(partitions_of(1) == std::vector<std::vector<unsigned>>{{1}});
  CHECK(partitions_of(2) == std::vector<std::vector<unsigned>>{{1, 1}, {2}});
  CHECK(partitions_of(3) == std::vector<std::vector<unsigned>>{{1, 1, 1}, {2, 1}, {3}});
  CHECK(partition_label({2, 1}) == "(2,1)");
  auto ctx = GroupContext::create(kFrob, 2, 3, 1);
  CHECK_THROWS_AS(torus_from_partition(ctx, {1}), InvalidArgument);
}

TEST_CASE("partition tori have the expected orders and decompositions") {
  struct C {
    unsigned n, q;
  };
  for (auto c : {C{1, 3}, C{1, 4}, C{2, 2}, C{2, 3}, C{2, 4}, C{3, 2}, C{3, 3}}) {
    auto ctx = GroupContext::create(kFrob, c.n, c.q, 1);
    const MatOps& ops = ctx->ops();
    for (const auto& lambda : partitions_of(c.n)) {
      CAPTURE(c.n);
      CAPTURE(c.q);
      CAPTURE(partition_label(lambda));
      auto T = torus_from_partition(ctx, lambda);
      REQUIRE(T->size() == partition_torus_order(c.q, lambda));
      CHECK(T->label() == partition_label(lambda));
      CHECK(T->is_full_unit_group());
      std::uint64_t prod = 1;
      for (std::size_t i = 0; i < T->generators().size(); ++i) {
        CHECK(element_order(ops, T->generators()[i]) == T->orders()[i]);
        prod *= T->orders()[i];
      }
      CHECK(prod == T->size());
      for (std::uint32_t i = 0; i < T->size(); ++i) {
        const Mat& t = T->points()[i];
        CHECK(ctx->contains(t, true));
        CHECK(T->index_of(t) == i);
        CHECK(T->from_coordinates(T->coordinates(i)) == t);
        for (const auto& u : T->generators()) REQUIRE(ops.commute(t, u));
      }
    }
  }
}

TEST_CASE("torus of a regular element") {
  auto ctx = GroupContext::create(kFrob, 2, 3, 1);
  Mat s(2);
  s.a = {1, 0, 0, 2};
  auto T = torus_of_regular_element(ctx, s, TorusLevel::kFixed);
  CHECK(T->size() == 4);
  CHECK(T->label() == "type(1,1)");
  CHECK(T->contains(s));
  Mat c(2);
  c.a = {0, 1, 1, 0};  // x^2 - 1 = (x - 1)(x + 1): regular, split
  CHECK(torus_of_regular_element(ctx, c, TorusLevel::kFixed)->size() == 4);
  Mat e(2);
  e.a = {0, 2, 1, 0};  // x^2 + 1, irreducible over GF(3)
  auto E = torus_of_regular_element(ctx, e, TorusLevel::kFixed, "E");
  CHECK(E->size() == 8);
  CHECK(E->label() == "E");
  CHECK_THROWS_AS(torus_of_regular_element(ctx, ctx->ops().identity(), TorusLevel::kFixed), PreconditionViolated);
}

TEST_CASE("centralizer tori agree with element centralizers") {
  struct C {
    unsigned n, q, ell;
  };
  for (auto c : {C{2, 2, 2}, C{2, 3, 2}, C{1, 3, 2}, C{2, 2, 3}}) {
    auto ctx = GroupContext::create(kFrob, c.n, c.q, c.ell);
    for (const auto& lambda : partitions_of(c.n)) {
      auto T = torus_from_partition(ctx, lambda);
      auto Tt = centralizer_torus(T);
      CHECK(Tt->level() == TorusLevel::kAmbient);
      CHECK(Tt->label() == "C" + partition_label(lambda));
      // Over GF(q^ell) the hull splits into factors of degree lambda_i / gcd(lambda_i, ell).
      std::uint64_t expected = 1;
      for (unsigned d : lambda) {
        unsigned g = std::gcd(d, c.ell);
        expected *= ipow(ipow(c.q, c.ell * d / g) - 1, g);
      }
      CHECK(Tt->size() == expected);
      for (const auto& t : T->points()) CHECK(Tt->contains(t));
      for (const auto& s : T->points()) {
        if (!ctx->is_regular_semisimple(s)) continue;
        const auto C = ctx->centralizer(s, false);
        CHECK(C == std::vector<Mat>(Tt->points().begin(), Tt->points().end()));
        break;
      }
    }
  }
  auto g9 = GroupContext::create(kFrob, 2, 3, 2);
  CHECK(centralizer_torus(torus_from_partition(g9, {2}))->size() == 64);
  CHECK(centralizer_torus(torus_from_partition(g9, {1, 1}))->size() == 64);
}

TEST_CASE("orthogonal torus") {
  for (auto [q, size, tilde] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{
           {3, 4, 8}, {5, 4, 16}, {7, 8, 48}}) {
    auto ctx = GroupContext::create(kTI, 2, q, 2);
    auto S = orthogonal_torus(ctx);
    CHECK(S->label() == "SO2");
    CHECK(S->size() == size);
    CHECK(S->points() == ctx->elements(true));
    CHECK(is_epsilon_invariant(*S));
    auto St = centralizer_torus(S);
    CHECK(St->size() == tilde);
    CHECK(St->label() == "C[SO2]");
    for (bool fixed : {true, false})
      CHECK(weyl_group(S, fixed).normalizer == ctx->normalizer_of_set(S->points(), fixed));
  }
}

TEST_CASE("Weyl groups") {
  struct C {
    unsigned n, q;
    std::vector<unsigned> lambda;
    std::size_t w;
  };
  for (const auto& c : {C{1, 3, {1}, 1}, C{2, 2, {1, 1}, 2}, C{2, 2, {2}, 2}, C{2, 3, {1, 1}, 2}, C{2, 3, {2}, 2},
                        C{3, 2, {1, 1, 1}, 6}, C{3, 2, {2, 1}, 2}, C{3, 2, {3}, 3}}) {
    auto ctx = GroupContext::create(kFrob, c.n, c.q, 1);
    auto T = torus_from_partition(ctx, c.lambda);
    const auto W = weyl_group(T, true);
    CAPTURE(partition_label(c.lambda));
    CHECK(W.representatives.size() == c.w);
    CHECK(W.normalizer.size() == c.w * T->size());
    for (const auto& g : W.normalizer) CHECK(T->hull().conjugates_onto(g, T->hull()));
  }
}

TEST_CASE("transporters") {
  auto ctx = GroupContext::create(kFrob, 2, 3, 1);
  auto S = torus_from_partition(ctx, {1, 1});
  auto T = torus_from_partition(ctx, {2});
  auto St = centralizer_torus(S);
  auto W_S = weyl_group(S, true);
  auto X = weyl_transporter(S, S, St, W_S);
  CHECK(X.elements == W_S.normalizer);
  CHECK(X.coset_representatives.size() == 2);
  CHECK(X.orbits.size() == 1);
  CHECK(X.index_of(ctx->ops().identity()).has_value());
  CHECK(weyl_transporter(S, T, centralizer_torus(T), weyl_group(T, true)).empty());

  // Point groups of different sizes never transport, even over GF(9).
  auto c2 = GroupContext::create(kFrob, 2, 3, 2);
  auto S2 = torus_from_partition(c2, {1, 1});
  auto T2 = torus_from_partition(c2, {2});
  CHECK(weyl_transporter(T2, S2, centralizer_torus(S2), weyl_group(S2, true)).empty());
  // S = T split: X is the monomial group over GF(9).
  T2 = S2;
  auto T2t = centralizer_torus(T2);
  auto Y = weyl_transporter(S2, T2, T2t, weyl_group(T2, true));
  CHECK(Y.elements.size() == 128);
  CHECK(Y.elements.size() % T2t->size() == 0);
  CHECK(Y.coset_representatives.size() == Y.elements.size() / T2t->size());
  CHECK(Y.orbits.size() == 1);
  std::size_t in_orbits = 0;
  for (std::size_t o = 0; o < Y.orbits.size(); ++o) in_orbits += Y.orbit_elements(o).size();
  CHECK(in_orbits == Y.elements.size());
  for (const auto& g : Y.elements) CHECK(transports(g, *S2, *T2));
  for (std::size_t i = 0; i < Y.elements.size(); ++i)
    CHECK(T2t->contains(c2->ops().mul(Y.elements[i], c2->ops().inverse(Y.coset_representatives[Y.coset_of[i]]))));
}

TEST_CASE("characters and orthogonality") {
  auto ctx = GroupContext::create(kFrob, 2, 3, 1);
  auto T = torus_from_partition(ctx, {1, 1});
  const auto chars = TorusCharacter::all(T);
  REQUIRE(chars.size() == T->size());
  CHECK(chars.front().is_trivial());
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      CycloNumber sum;
      for (const auto& t : T->points()) sum += chars[i].value(t) * chars[j].value(t).conj();
      CHECK(sum == CycloNumber::integer(i == j ? std::int64_t(T->size()) : 0));
    }
  for (const auto& chi : chars)
    for (const auto& s : T->points())
      for (const auto& t : T->points())
        CHECK(chi.value(ctx->ops().mul(s, t)) == chi.value(s) * chi.value(t));
}

TEST_CASE("a character of GF(4)^* takes the value zeta_3") {
  auto ctx = GroupContext::create(kFrob, 1, 4, 1);
  auto T = torus_from_partition(ctx, {1});
  REQUIRE(T->size() == 3);
  TorusCharacter theta(T, {1});
  CHECK(theta.conductor() == 3);
  const auto v = evaluate_character(theta, T->generators()[0]);
  CHECK(v == CycloNumber::root_of_unity(3, 1));
  CHECK(oracle::close(oracle::evaluate(v), std::polar(1.0, 2 * std::acos(-1.0) / 3)));
  CHECK(v * v * v == CycloNumber::integer(1));
}

TEST_CASE("composition with the norm") {
  auto c4 = GroupContext::create(kFrob, 1, 2, 2);
  auto T4 = torus_from_partition(c4, {1});
  auto chi4 = compose_with_norm(TorusCharacter(T4, {0}), centralizer_torus(T4));
  CHECK(chi4.is_trivial());

  auto c9 = GroupContext::create(kFrob, 1, 3, 2);
  auto T9 = torus_from_partition(c9, {1});
  auto Tt9 = centralizer_torus(T9);
  REQUIRE(Tt9->size() == 8);
  auto chi9 = compose_with_norm(TorusCharacter(T9, {1}), Tt9);
  const Field& F = c9->ambient_field();
  for (const auto& t : Tt9->points()) {
    const bool square = F.log(t.a[0]) % 2 == 0;
    CHECK(chi9.value(t) == CycloNumber::integer(square ? 1 : -1));
  }
  CHECK(is_epsilon_invariant(chi9));
}

TEST_CASE("epsilon invariance and fixed points of centralizer tori") {
  for (auto [q, ell] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto ctx = GroupContext::create(kFrob, 2, q, ell);
    for (const auto& lambda : partitions_of(2)) {
      auto T = torus_from_partition(ctx, lambda);
      auto Tt = centralizer_torus(T);
      CHECK(is_epsilon_invariant(*Tt));
      std::vector<Mat> fixed;
      for (const auto& t : Tt->points())
        if (ctx->apply_automorphism(t, 1) == t) fixed.push_back(t);
      CHECK(fixed == T->points());
      for (const auto& theta : TorusCharacter::all(T)) CHECK(is_epsilon_invariant(compose_with_norm(theta, Tt)));
    }
    // Some conjugate of the split torus by G~ is not eps-stable.
    auto Tt = centralizer_torus(torus_from_partition(ctx, {1, 1}));
    bool found = false;
    for (const auto& g : ctx->elements(false)) {
      if (is_epsilon_invariant(*conjugate_torus(Tt, g, "x"))) continue;
      found = true;
      break;
    }
    CHECK(found);
  }
}

TEST_CASE("cyclotomic arithmetic against complex numbers") {
  std::mt19937 rng(7);
  for (std::uint32_t N : {1u, 2u, 3u, 4u, 5u, 8u, 12u, 15u}) {
    CHECK(cyclotomic_polynomial(N).size() == euler_phi(N) + 1);
    for (int k = 0; k < 20; ++k) {
      const auto a = random_cyclo(rng, N), b = random_cyclo(rng, N), c = random_cyclo(rng, N);
      const auto A = oracle::evaluate(a), B = oracle::evaluate(b);
      CHECK(oracle::close(oracle::evaluate(a + b), A + B));
      CHECK(oracle::close(oracle::evaluate(a - b), A - B));
      CHECK(oracle::close(oracle::evaluate(a * b), A * B));
      CHECK(oracle::close(oracle::evaluate(a.conj()), std::conj(A)));
      CHECK(oracle::close(oracle::evaluate(a.lift(N * 3)), A));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.lift(2 * N) == a);
      CHECK((a - a).is_zero());
    }
    std::vector<std::int64_t> ones(N, 1);
    CHECK(CycloNumber::from_power_counts(N, ones) == CycloNumber::integer(N == 1 ? 1 : 0));
  }
  CHECK(CycloNumber::root_of_unity(4, 1) * CycloNumber::root_of_unity(4, 1) == CycloNumber::integer(-1));
  CHECK(CycloNumber::root_of_unity(6, 1) == -CycloNumber::root_of_unity(3, 2));
  CHECK((CycloNumber::integer(3) / mpq_class(2)).is_integral() == false);
  CHECK(CycloNumber::integer(0, 8).to_string() == "0");
}

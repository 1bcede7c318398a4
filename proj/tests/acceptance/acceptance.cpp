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
// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dlchar/dlchar.h"
#include "dlchar/report.hpp"
#include "dlchar/verification.hpp"
#include "oracles.hpp"

using namespace dlchar;

namespace {

struct Config {
  unsigned n, q, ell;
};

const std::vector<Config> kTheoremConfigs = {{1, 2, 2}, {1, 3, 2}, {1, 2, 3}, {2, 2, 2}, {2, 3, 2}, {2, 2, 3}};

VerifyConfig make(const Config& c) {
  VerifyConfig v;
  v.n = c.n;
  v.q = c.q;
  v.ell = c.ell;
  return v;
}

std::string name(const Config& c) {
  return "(" + std::to_string(c.n) + "," + std::to_string(c.q) + "," + std::to_string(c.ell) + ")";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d [%s] %s: %s (%.2fs)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<VerifyReport> theorem_reports;

// Sum of theta over the points of a torus, from exponent counts.
CycloNumber character_sum(const TorusCharacter& theta, std::uint32_t conductor,
                          const std::function<std::uint32_t(std::uint32_t)>& exponent) {
  std::vector<std::int64_t> counts(conductor, 0);
  for (std::uint32_t i = 0; i < theta.torus()->size(); ++i) ++counts[exponent(i) % conductor];
  return CycloNumber::from_power_counts(conductor, counts);
}

Outcome check_orthogonality(const TorusPtr& T) {
  Outcome o;
  const auto chars = TorusCharacter::all(T);
  if (chars.size() != T->size()) o.fail("wrong number of characters on " + T->label());
  std::uint32_t N = 1;
  for (auto d : T->orders()) N = std::lcm(N, d);
  for (std::size_t a = 0; a < chars.size(); ++a) {
    const std::uint32_t sa = N / chars[a].conductor();
    // Multiplicativity on generators.
    for (std::size_t j = 0; j < T->generators().size(); ++j)
      for (std::uint32_t i = 0; i < T->size(); ++i) {
        const Mat gt = T->context()->ops().mul(T->generators()[j], T->points()[i]);
        const std::uint32_t lhs = chars[a].exponent_at(gt) * sa % N;
        const std::uint32_t rhs = (chars[a].exponent_at(T->generators()[j]) + chars[a].exponent_at_index(i)) * sa % N;
        if (lhs != rhs) o.fail("character of " + T->label() + " is not multiplicative");
      }
    for (std::size_t b = 0; b < chars.size(); ++b) {
      const std::uint32_t sb = N / chars[b].conductor();
      const auto sum = character_sum(chars[a], N, [&](std::uint32_t i) {
        return chars[a].exponent_at_index(i) * sa + (N - chars[b].exponent_at_index(i) * sb % N);
      });
      if (sum != CycloNumber::integer(a == b ? std::int64_t(T->size()) : 0)) o.fail("orthogonality fails on " + T->label());
    }
  }
  return o;
}

}  // namespace

int main() {
  std::printf("dlchar %s acceptance suite\n", kVersion);

  criterion(1, "theorem identity, Frobenius mode", [] {
    Outcome o;
    std::size_t total = 0;
    for (const auto& c : kTheoremConfigs) {
      auto r = verify_theorem(make(c));
      const auto s = r.summary();
      if (s.failed) o.fail(name(c) + ": " + std::to_string(s.failed) + " failing cases");
      if (r.is_vacuous() || s.passed == 0) o.fail(name(c) + ": vacuous");
      total += s.passed;
      theorem_reports.push_back(std::move(r));
    }
    if (o.pass) o.detail = std::to_string(total) + " cases over 6 configs, 0 failures";
    return o;
  });

  criterion(2, "semidirect-product oracle equals collapsed formula", [] {
    Outcome o;
    std::size_t compared = 0;
    if (theorem_reports.size() != kTheoremConfigs.size()) o.fail("criterion 1 did not produce reports");
    for (const auto& r : theorem_reports)
      for (const auto& rec : r.cases) {
        if (rec.vacuous) continue;
        if (!rec.lhs_full || !rec.lhs || !(*rec.lhs_full == *rec.lhs)) o.fail("mismatch in " + r.context->describe());
        ++compared;
      }
    if (o.pass) o.detail = std::to_string(compared) + " cases identical";
    return o;
  });

  criterion(3, "normalizer characterization", [] {
    Outcome o;
    std::size_t total = 0;
    for (const auto& c : kTheoremConfigs) {
      if (c.n != 2) continue;
      const auto r = verify_normalizer_characterization(make(c));
      if (!r.success() || r.is_vacuous()) o.fail(name(c) + ": " + std::to_string(r.summary().failed) + " failing");
      total += r.summary().passed;
    }
    if (o.pass) o.detail = std::to_string(total) + " sets equal elementwise";
    return o;
  });

  criterion(4, "vanishing for the split torus of GL_2(GF(2))", [] {
    Outcome o;
    auto cfg = make({2, 2, 2});
    cfg.partitions = {{1, 1}};
    const auto r = verify_vanishing(cfg);
    std::size_t zero = 0;
    for (const auto& rec : r.cases) {
      if (rec.vacuous) continue;
      if (!rec.lhs->is_zero() || !rec.rhs->is_zero()) o.fail("nonzero value");
      if (!r.context->is_regular_semisimple(r.context->norm(rec.s_tilde))) o.fail("norm not regular");
      ++zero;
    }
    if (r.is_vacuous() || zero == 0) o.fail("vacuous");
    if (o.pass) o.detail = std::to_string(zero) + " cases with LHS = RHS = 0";
    return o;
  });

  criterion(5, "lift independence", [] {
    Outcome o;
    auto cfg = make({2, 2, 2});
    cfg.trials = 10;
    const auto r = verify_lift_independence(cfg);
    if (!r.success()) o.fail(std::to_string(r.summary().failed) + " cases changed with the lift");
    if (r.is_vacuous()) o.fail("vacuous");
    if (o.pass) o.detail = std::to_string(r.summary().passed) + " cases, 10 trials each";
    return o;
  });

  criterion(6, "sharpness in transpose-inverse mode", [] {
    Outcome o;
    std::string found;
    for (unsigned q : {3u, 5u}) {
      VerifyConfig cfg = make({2, q, 2});
      cfg.mode = AutomorphismKind::kTransposeInverse;
      const auto r = find_remark_counterexample(cfg);
      std::size_t bad = 0;
      for (const auto& rec : r.cases) {
        if (rec.match) continue;
        if (!rec.lhs || !rec.rhs || *rec.lhs == *rec.rhs) o.fail("failure without two distinct recorded values");
        if (!r.context->is_regular_semisimple(rec.s_tilde)) o.fail("s~ not regular");
        if (r.context->is_regular_semisimple(r.context->norm(rec.s_tilde))) o.fail("N(s~) regular");
        ++bad;
      }
      if (bad == 0) o.fail("no counterexample at q = " + std::to_string(q));
      found += (found.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + ": " + std::to_string(bad);
    }
    if (o.pass) o.detail = "counterexamples found (" + found + ")";
    return o;
  });

  criterion(7, "GL_1 closed form", [] {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& c : kTheoremConfigs) {
      if (c.n != 1) continue;
      auto ctx = make_context(make(c));
      auto T = torus_from_partition(ctx, {1});
      for (const auto& theta : TorusCharacter::all(T)) {
        TwistedDLCharacter chi(theta);
        for (const auto& x : ctx->elements(false)) {
          if (!(twisted_dl_value_collapsed(chi, x) == theta.value(ctx->norm(x)))) o.fail(name(c));
          ++checked;
        }
      }
    }
    if (o.pass) o.detail = std::to_string(checked) + " values equal theta(N(s~))";
    return o;
  });

  criterion(8, "algebraic substrate", [] {
    Outcome o;
    std::set<std::uint32_t> conductors{1, 2, 3, 4, 6, 8};
    for (const auto& c : kTheoremConfigs) {
      auto ctx = make_context(make(c));
      const FieldTower& tw = *ctx->tower();
      // Embeddings are ring homomorphisms commuting with Frobenius and composing correctly.
      for (unsigned a : tw.degrees())
        for (unsigned b : tw.degrees()) {
          if (b % a || a == b) continue;
          const Field& A = tw.field(a);
          const Field& B = tw.field(b);
          for (Elem x = 0; x < A.size(); ++x) {
            const Elem ex = tw.embed(x, a, b);
            if (B.frobenius(ex, a) != ex) o.fail("embedded element not fixed by Frobenius");
            if (tw.embed(A.frobenius(x, 1), a, b) != B.frobenius(ex, 1)) o.fail("embedding and Frobenius");
            for (Elem y = 0; y < A.size(); ++y) {
              if (tw.embed(A.mul(x, y), a, b) != B.mul(ex, tw.embed(y, a, b))) o.fail("embedding not multiplicative");
              if (tw.embed(A.add(x, y), a, b) != B.add(ex, tw.embed(y, a, b))) o.fail("embedding not additive");
            }
            for (unsigned d : tw.degrees())
              if (d % b == 0 && tw.embed(ex, b, d) != tw.embed(x, a, d)) o.fail("embeddings do not compose");
          }
        }
      // Norm surjectivity.
      const Field& big = ctx->ambient_field();
      const std::uint64_t e = (big.size() - 1) / (c.q - 1);
      std::set<Elem> image;
      for (Elem x = 1; x < big.size(); ++x) {
        const Elem nx = big.pow(x, std::int64_t(e));
        if (!ctx->to_base(nx)) o.fail("norm leaves the base field");
        image.insert(nx);
      }
      if (image.size() != c.q - 1) o.fail("norm not surjective for " + name(c));
      // Orthogonality on every standard torus and its centralizer torus.
      for (const auto& lambda : partitions_of(c.n)) {
        auto T = torus_from_partition(ctx, lambda);
        for (const auto& U : {T, centralizer_torus(T)}) {
          const auto r = check_orthogonality(U);
          if (!r.pass) o.fail(name(c) + " " + r.detail);
          for (auto d : U->orders()) conductors.insert(d);
        }
      }
    }
    // Ring axioms in Q(zeta_N), checked against complex evaluation.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-4, 4);
    std::size_t samples = 0;
    for (std::uint32_t N : conductors) {
      auto rnd = [&] {
        std::vector<mpq_class> v(euler_phi(N));
        for (auto& x : v) x = mpq_class(dist(rng), 1 + (dist(rng) + 4) % 3);
        return CycloNumber::from_coefficients(N, v);
      };
      for (int k = 0; k < 25; ++k, ++samples) {
        const auto a = rnd(), b = rnd(), c = rnd();
        const auto one = CycloNumber::integer(1, N);
        if (!((a * b) * c == a * (b * c)) || !(a * b == b * a) || !(a * (b + c) == a * b + a * c) ||
            !((a + b) + c == a + (b + c)) || !((a - a).is_zero()) || !(a * one == a) || !((a * b).conj() == a.conj() * b.conj()))
          o.fail("ring axiom fails for N = " + std::to_string(N));
        if (!oracle::close(oracle::evaluate(a * b), oracle::evaluate(a) * oracle::evaluate(b)))
          o.fail("product disagrees with complex evaluation for N = " + std::to_string(N));
      }
    }
    if (o.pass) o.detail = "towers, norms, orthogonality on all tori; " + std::to_string(samples) + " cyclotomic samples";
    return o;
  });

  criterion(9, "byte-identical JSON across runs", [] {
    Outcome o;
    std::size_t bytes = 0;
    for (const auto& c : kTheoremConfigs) {
      std::string runs[2];
      for (auto& out : runs) {
        dlc_options opts;
        dlc_options_init(&opts);
        opts.n = c.n;
        opts.q = c.q;
        opts.ell = c.ell;
        dlc_session* s = nullptr;
        if (dlc_session_create(&opts, &s) != DLC_OK) {
          o.fail(dlc_last_error());
          return o;
        }
        char* text = nullptr;
        int success = 0;
        if (dlc_run_check(s, DLC_CHECK_THEOREM, DLC_FORMAT_JSON, &text, &success) != DLC_OK) o.fail(dlc_last_error());
        out = text ? text : "";
        dlc_free(text);
        dlc_session_destroy(s);
      }
      if (runs[0].empty() || runs[0] != runs[1]) o.fail(name(c) + ": reports differ");
      bytes += runs[0].size();
    }
    if (o.pass) o.detail = "6 report pairs identical, " + std::to_string(bytes) + " bytes each run";
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

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
#include "dlchar/torus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^e in an algebra whose identity is `unit` (possibly an idempotent).
Mat power_with_unit(const MatOps& ops, const Mat& unit, Mat x, std::uint64_t e) {
  Mat r = unit;
  while (e) {
    if (e & 1) r = ops.mul(r, x);
    x = ops.mul(x, x);
    e >>= 1;
  }
  return r;
}

unsigned scalar_degree_for(const GroupContext& ctx, TorusLevel level) {
  return level == TorusLevel::kFixed ? ctx.base_degree() : ctx.ambient_degree();
}

}  // namespace

// ---------------------------------------------------------------------------
// Hull

Hull::Hull(ContextPtr ctx, FpSubspace space) : ctx_(std::move(ctx)), space_(std::move(space)) { rebuild_basis(); }

void Hull::rebuild_basis() {
  basis_.clear();
  for (const auto& row : space_.basis()) basis_.push_back(devectorize(row));
}

FpVector Hull::vectorize(const Mat& x) const {
  const Field& F = ctx_->ambient_field();
  const unsigned m = F.degree();
  FpVector v(std::size_t(x.entries()) * m);
  for (unsigned k = 0; k < x.entries(); ++k) {
    Elem c = x.a[k];
    for (unsigned i = 0; i < m; ++i) {
      v[k * m + i] = c % F.characteristic();
      c /= F.characteristic();
    }
  }
  return v;
}

Mat Hull::devectorize(const FpVector& v) const {
  const Field& F = ctx_->ambient_field();
  const unsigned m = F.degree();
  Mat x(ctx_->n());
  for (unsigned k = 0; k < x.entries(); ++k) {
    Elem code = 0;
    for (unsigned i = m; i-- > 0;) code = code * F.characteristic() + v[k * m + i];
    x.a[k] = std::uint16_t(code);
  }
  return x;
}

Hull Hull::generated_by(ContextPtr ctx, std::span<const Mat> gens, unsigned scalar_degree) {
  if (ctx->ambient_degree() % scalar_degree != 0)
    throw InvalidArgument("scalar field is not a subfield of the ambient field");
  const MatOps& ops = ctx->ops();
  const unsigned n = ctx->n();
  Hull h(ctx, FpSubspace(ctx->characteristic(), std::size_t(n) * n * ctx->ambient_degree()));

  // GF(p) scalars come for free from the subspace; GF(p) itself need not be in the tower.
  std::vector<Elem> scalars{1};
  if (scalar_degree > 1) {
    scalars.clear();
    const Field& S = ctx->tower()->field(scalar_degree);
    for (unsigned i = 0; i < scalar_degree; ++i)
      scalars.push_back(ctx->tower()->embed(S.exp(i), scalar_degree, ctx->ambient_degree()));
  }

  std::vector<Mat> seeds{ops.identity()};
  seeds.insert(seeds.end(), gens.begin(), gens.end());
  for (const auto& g : seeds)
    for (Elem c : scalars) h.space_.insert(h.vectorize(ops.scale(c, g)));

  // Close under multiplication.
  bool grew = true;
  while (grew) {
    grew = false;
    h.rebuild_basis();
    const auto basis = h.basis_;
    for (const auto& x : basis)
      for (const auto& y : basis)
        if (h.space_.insert(h.vectorize(ops.mul(x, y)))) grew = true;
  }
  h.rebuild_basis();
  return h;
}

bool Hull::contains(const Mat& x) const { return space_.contains(vectorize(x)); }

bool Hull::is_commutative() const {
  const MatOps& ops = ctx_->ops();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!ops.commute(basis_[i], basis_[j])) return false;
  return true;
}

Hull Hull::conjugated(const Mat& g) const {
  const MatOps& ops = ctx_->ops();
  const Mat gi = ops.inverse(g);
  Hull h(ctx_, FpSubspace(space_.characteristic(), space_.ambient_dim()));
  for (const auto& b : basis_) h.space_.insert(vectorize(ops.mul(ops.mul(g, b), gi)));
  h.rebuild_basis();
  return h;
}

bool Hull::conjugates_onto(const Mat& g, const Hull& other) const {
  if (dimension() != other.dimension()) return false;
  const MatOps& ops = ctx_->ops();
  const Mat gi = ops.inverse(g);
  for (const auto& b : basis_)
    if (!other.contains(ops.mul(ops.mul(g, b), gi))) return false;
  return true;
}

Hull Hull::epsilon_image() const {
  Hull h(ctx_, FpSubspace(space_.characteristic(), space_.ambient_dim()));
  for (const auto& b : basis_) h.space_.insert(vectorize(ctx_->apply_to_algebra(b, 1)));
  h.rebuild_basis();
  return h;
}

std::vector<Mat> Hull::elements() const {
  const unsigned p = ctx_->characteristic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    count *= p;
    if (count > kMaxHullElements) throw BudgetExceeded("hull has more than 2^20 elements");
  }
  const MatOps& ops = ctx_->ops();
  std::vector<Mat> out{ops.zero()};
  for (const auto& b : basis_) {
    std::vector<Mat> next;
    next.reserve(out.size() * p);
    for (const auto& x : out) {
      Mat cur = x;
      for (unsigned c = 0; c < p; ++c) {
        next.push_back(cur);
        cur = ops.add(cur, b);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// RationalTorus

RationalTorus::RationalTorus(ContextPtr ctx, Hull hull, TorusLevel level, std::string label)
    : ctx_(std::move(ctx)), hull_(std::move(hull)), level_(level), label_(std::move(label)) {
  if (!hull_.is_commutative()) throw InvalidArgument("torus hull is not commutative");
  const MatOps& ops = ctx_->ops();
  const auto all = hull_.elements();
  std::size_t units = 0;
  for (const auto& x : all) {
    if (!ops.invertible(x)) continue;
    ++units;
    if (level_ == TorusLevel::kAmbient || ctx_->contains(x, true)) points_.push_back(x);
  }
  full_units_ = points_.size() == units;
  for (std::uint32_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);

  decompose_by_idempotents(all);
  if (!full_units_) {
    generators_.clear();
    orders_.clear();
    decompose_generic();
  }
  build_coordinates();
  if (label_.empty()) label_ = "type" + partition_label(factor_degrees_);
}

void RationalTorus::decompose_by_idempotents(const std::vector<Mat>& hull_elements) {
  const MatOps& ops = ctx_->ops();
  std::vector<Mat> idem;
  for (const auto& x : hull_elements) {
    if (x == ops.zero()) continue;
    if (ops.mul(x, x) == x) idem.push_back(x);
  }
  std::vector<Mat> primitive;
  for (const auto& e : idem) {
    bool minimal = true;
    for (const auto& f : idem)
      if (!(f == e) && ops.mul(e, f) == f) {
        minimal = false;
        break;
      }
    if (minimal) primitive.push_back(e);
  }
  std::sort(primitive.begin(), primitive.end(), [](const Mat& x, const Mat& y) { return y < x; });

  const unsigned sdeg = scalar_degree_for(*ctx_, level_);
  const Mat one = ops.identity();
  factor_degrees_.clear();
  for (const auto& e : primitive) {
    std::set<Mat> factor;
    for (const auto& x : hull_elements) factor.insert(ops.mul(e, x));
    std::size_t dim = 0;
    for (std::size_t s = factor.size(); s > 1; s /= ctx_->characteristic()) ++dim;
    factor_degrees_.push_back(unsigned(dim / sdeg));

    const std::uint32_t ord = std::uint32_t(factor.size() - 1);
    const auto primes = prime_divisors(ord);
    std::optional<Mat> gen;
    for (const auto& x : factor) {
      if (x == ops.zero()) continue;
      if (!(power_with_unit(ops, e, x, ord) == e)) continue;
      bool ok = true;
      for (auto r : primes)
        if (power_with_unit(ops, e, x, ord / r) == e) {
          ok = false;
          break;
        }
      if (ok) {
        gen = x;
        break;
      }
    }
    if (!gen) throw InternalError("simple factor of a torus hull is not a field");
    generators_.push_back(ops.add(*gen, ops.sub(one, e)));
    orders_.push_back(ord);
  }
}

void RationalTorus::decompose_generic() {
  const MatOps& ops = ctx_->ops();
  const std::size_t N = points_.size();
  const std::uint32_t id = *index_of(ops.identity());
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    auto r = index_of(ops.mul(points_[a], points_[b]));
    if (!r) throw InternalError("torus point set is not closed under multiplication");
    return *r;
  };
  auto power = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = id;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  };
  std::vector<std::uint32_t> order(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    std::uint32_t k = 1, cur = i;
    while (cur != id) {
      cur = mul(cur, i);
      ++k;
    }
    order[i] = k;
  }

  for (auto r : prime_divisors(std::uint32_t(N))) {
    std::vector<std::uint32_t> sylow;
    for (std::uint32_t i = 0; i < N; ++i) {
      std::uint32_t o = order[i];
      while (o % r == 0) o /= r;
      if (o == 1) sylow.push_back(i);
    }
    std::vector<char> in_h(N, 0);
    in_h[id] = 1;
    std::vector<std::uint32_t> h_list{id};
    while (h_list.size() < sylow.size()) {
      // Element whose coset modulo H has the largest order; least index on ties.
      std::uint32_t best = id, best_ord = 0;
      for (auto x : sylow) {
        std::uint32_t k = 1, cur = x;
        while (!in_h[cur]) {
          cur = mul(cur, x);
          ++k;
        }
        if (k > best_ord) {
          best_ord = k;
          best = x;
        }
      }
      const std::uint32_t target = power(best, best_ord);
      std::optional<std::uint32_t> root;
      for (auto h : h_list)
        if (power(h, best_ord) == target) {
          root = h;
          break;
        }
      if (!root) throw InternalError("cyclic decomposition failed to split");
      const std::uint32_t root_inv = *index_of(ops.inverse(points_[*root]));
      const std::uint32_t y = mul(best, root_inv);
      generators_.push_back(points_[y]);
      orders_.push_back(best_ord);
      std::vector<std::uint32_t> next;
      for (auto h : h_list) {
        std::uint32_t cur = h;
        for (std::uint32_t k = 0; k < best_ord; ++k) {
          if (!in_h[cur]) {
            in_h[cur] = 1;
            next.push_back(cur);
          }
          cur = mul(cur, y);
        }
      }
      h_list.insert(h_list.end(), next.begin(), next.end());
    }
  }
}

void RationalTorus::build_coordinates() {
  const MatOps& ops = ctx_->ops();
  const std::size_t rank = generators_.size();
  std::uint64_t total = 1;
  for (auto d : orders_) total *= d;
  if (total != points_.size()) throw InternalError("cyclic decomposition does not match the torus order");
  coords_.assign(points_.size() * rank, 0);
  std::vector<char> seen(points_.size(), 0);
  std::vector<std::uint32_t> c(rank, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    Mat x = ops.identity();
    for (std::size_t i = 0; i < rank; ++i) x = ops.mul(x, ops.pow(generators_[i], c[i]));
    auto idx = index_of(x);
    if (!idx || seen[*idx]) throw InternalError("torus coordinates are not a bijection");
    seen[*idx] = 1;
    std::copy(c.begin(), c.end(), coords_.begin() + std::ptrdiff_t(*idx * rank));
    for (std::size_t i = rank; i-- > 0;) {
      if (++c[i] < orders_[i]) break;
      c[i] = 0;
    }
  }
}

std::optional<std::uint32_t> RationalTorus::index_of(const Mat& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> RationalTorus::coordinates(std::uint32_t point_index) const {
  const std::size_t rank = generators_.size();
  return {coords_.data() + std::size_t(point_index) * rank, rank};
}

std::span<const std::uint32_t> RationalTorus::coordinates(const Mat& t) const {
  auto idx = index_of(t);
  if (!idx) throw PreconditionViolated("element is not a point of torus " + label_);
  return coordinates(*idx);
}

Mat RationalTorus::from_coordinates(std::span<const std::uint32_t> coords) const {
  if (coords.size() != generators_.size()) throw InvalidArgument("coordinate tuple has wrong length");
  const MatOps& ops = ctx_->ops();
  Mat x = ops.identity();
  for (std::size_t i = 0; i < coords.size(); ++i) x = ops.mul(x, ops.pow(generators_[i], coords[i] % orders_[i]));
  return x;
}

// ---------------------------------------------------------------------------
// TorusCharacter

TorusCharacter::TorusCharacter(TorusPtr torus, std::vector<std::uint32_t> exponents)
    : torus_(std::move(torus)), exponents_(std::move(exponents)) {
  const auto& d = torus_->orders();
  if (exponents_.size() != d.size())
    throw InvalidArgument("character needs " + std::to_string(d.size()) + " exponents for torus " + torus_->label());
  for (std::size_t i = 0; i < d.size(); ++i) {
    exponents_[i] %= d[i];
    conductor_ = std::lcm(conductor_, d[i]);
  }
  values_.resize(torus_->size());
  for (std::uint32_t idx = 0; idx < torus_->size(); ++idx) {
    const auto c = torus_->coordinates(idx);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < d.size(); ++i) e += std::uint64_t(conductor_ / d[i]) * exponents_[i] * c[i];
    values_[idx] = std::uint32_t(e % conductor_);
  }
}

bool TorusCharacter::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint32_t a) { return a == 0; });
}

std::uint32_t TorusCharacter::exponent_at(const Mat& t) const {
  auto idx = torus_->index_of(t);
  if (!idx) throw PreconditionViolated("element is not a point of torus " + torus_->label());
  return values_[*idx];
}

CycloNumber TorusCharacter::value(const Mat& t) const { return CycloNumber::root_of_unity(conductor_, exponent_at(t)); }

std::vector<TorusCharacter> TorusCharacter::all(const TorusPtr& torus) {
  const auto& d = torus->orders();
  std::vector<TorusCharacter> out;
  std::vector<std::uint32_t> a(d.size(), 0);
  while (true) {
    out.emplace_back(torus, a);
    std::size_t i = d.size();
    while (i-- > 0) {
      if (++a[i] < d[i]) break;
      a[i] = 0;
    }
    if (i == std::size_t(-1)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

std::string partition_label(const std::vector<unsigned>& partition) {
  std::string s = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(partition[i]);
  }
  return s + ")";
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  // Non-increasing parts, emitted in lexicographic order.
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = 1; part <= std::min(remaining, max_part); ++part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  for (auto& p : out) std::sort(p.begin(), p.end(), std::greater<unsigned>());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TorusPtr torus_from_partition(const ContextPtr& ctx, const std::vector<unsigned>& partition, TorusLevel level) {
  if (std::accumulate(partition.begin(), partition.end(), 0u) != ctx->n() ||
      std::any_of(partition.begin(), partition.end(), [](unsigned x) { return x == 0; }))
    throw InvalidArgument("partition " + partition_label(partition) + " does not sum to n = " + std::to_string(ctx->n()));
  if (level == TorusLevel::kFixed && ctx->kind() == AutomorphismKind::kTransposeInverse)
    throw InvalidArgument("partition tori of the fixed group exist only in Frobenius mode");

  const auto& tower = *ctx->tower();
  const unsigned a = ctx->base_degree();
  const unsigned amb = ctx->ambient_degree();
  const MatOps& ops = ctx->ops();
  std::vector<Mat> gens;
  unsigned offset = 0;
  for (unsigned k : partition) {
    Mat e(ctx->n());
    for (unsigned i = 0; i < k; ++i) e.set(offset + i, offset + i, 1);
    gens.push_back(e);
    if (k > 1) {
      if (!tower.has_degree(a * k))
        throw BudgetExceeded("GF(q^" + std::to_string(k) + ") is too large for a torus block");
      // Minimal polynomial over GF(q) of the generator of GF(q^k).
      const Field& big = tower.field(a * k);
      Poly f{1};
      const Elem g = big.generator();
      for (unsigned j = 0; j < k; ++j) {
        const Elem root = big.frobenius(g, std::int64_t(a) * j);
        f = poly_mul(big, f, Poly{big.neg(root), 1});
      }
      Mat c(ctx->n());
      for (unsigned i = 0; i + 1 < k; ++i) c.set(offset + i + 1, offset + i, 1);
      for (unsigned i = 0; i < k; ++i) {
        auto coeff = tower.restrict(f[i], a * k, a);
        if (!coeff) throw InternalError("minimal polynomial has coefficients outside GF(q)");
        c.set(offset + i, offset + k - 1, ops.field().neg(tower.embed(*coeff, a, amb)));
      }
      gens.push_back(c);
    }
    offset += k;
  }
  const unsigned sdeg = level == TorusLevel::kFixed ? a : amb;
  Hull hull = Hull::generated_by(ctx, gens, sdeg);
  std::string label = partition_label(partition);
  if (level == TorusLevel::kAmbient) label = "C" + label;
  return std::make_shared<RationalTorus>(ctx, std::move(hull), level, label);
}

TorusPtr torus_of_regular_element(const ContextPtr& ctx, const Mat& s, TorusLevel level, std::string label) {
  if (!ctx->ops().invertible(s) || !ctx->is_regular_semisimple(s))
    throw PreconditionViolated("element is not regular semisimple");
  if (level == TorusLevel::kFixed && !ctx->contains(s, true))
    throw PreconditionViolated("element does not lie in the fixed group");
  const Mat gens[] = {s};
  Hull hull = Hull::generated_by(ctx, gens, level == TorusLevel::kFixed ? ctx->base_degree() : ctx->ambient_degree());
  return std::make_shared<RationalTorus>(ctx, std::move(hull), level, std::move(label));
}

TorusPtr centralizer_torus(const TorusPtr& T) {
  if (T->level() != TorusLevel::kFixed) throw PreconditionViolated("centralizer_torus expects a torus of the fixed group");
  const ContextPtr& ctx = T->context();
  const MatOps& ops = ctx->ops();
  const Hull& A = T->hull();
  const std::size_t D = std::size_t(ctx->n()) * ctx->n() * ctx->ambient_degree();
  std::vector<FpVector> columns;
  columns.reserve(D);
  for (std::size_t j = 0; j < D; ++j) {
    FpVector unit(D, 0);
    unit[j] = 1;
    const Mat X = A.devectorize(unit);
    FpVector col;
    for (const auto& b : A.basis()) {
      const auto v = A.vectorize(ops.sub(ops.mul(X, b), ops.mul(b, X)));
      col.insert(col.end(), v.begin(), v.end());
    }
    columns.push_back(std::move(col));
  }
  std::vector<Mat> gens;
  for (const auto& v : fp_nullspace(ctx->characteristic(), columns)) gens.push_back(A.devectorize(v));
  Hull hull = Hull::generated_by(ctx, gens, 1);
  const std::string& l = T->label();
  return std::make_shared<RationalTorus>(ctx, std::move(hull), TorusLevel::kAmbient,
                                         l.front() == '(' ? "C" + l : "C[" + l + "]");
}

TorusPtr orthogonal_torus(const ContextPtr& ctx) {
  if (ctx->kind() != AutomorphismKind::kTransposeInverse) throw InvalidArgument("orthogonal_torus needs transpose-inverse mode");
  for (const auto& g : ctx->elements(true)) {
    if (!ctx->is_regular_semisimple(g)) continue;
    auto T = torus_of_regular_element(ctx, g, TorusLevel::kFixed, "SO2");
    if (T->size() != ctx->fixed_order()) throw InternalError("fixed group is not the unit group of its hull");
    return T;
  }
  throw InternalError("SO_2 has no regular element");
}

TorusPtr conjugate_torus(const TorusPtr& T, const Mat& g, std::string label) {
  return std::make_shared<RationalTorus>(T->context(), T->hull().conjugated(g), T->level(), std::move(label));
}

TorusCharacter compose_with_norm(const TorusCharacter& theta, const TorusPtr& T_tilde) {
  const RationalTorus& T = *theta.torus();
  const GroupContext& ctx = *T_tilde->context();
  for (const auto& t : T_tilde->points())
    if (!T.contains(ctx.norm(t)))
      throw PreconditionViolated("norm map sends a point of " + T_tilde->label() + " outside " + T.label());
  const std::uint32_t N = theta.conductor();
  std::vector<std::uint32_t> exps;
  for (std::size_t j = 0; j < T_tilde->generators().size(); ++j) {
    const std::uint32_t e = theta.exponent_at(ctx.norm(T_tilde->generators()[j]));
    const std::uint64_t num = std::uint64_t(e) * T_tilde->orders()[j];
    if (num % N != 0) throw InternalError("norm-composed character is not well defined on a generator");
    exps.push_back(std::uint32_t(num / N));
  }
  return TorusCharacter(T_tilde, std::move(exps));
}

CycloNumber evaluate_character(const TorusCharacter& theta, const Mat& t) { return theta.value(t); }

bool is_epsilon_invariant(const RationalTorus& T) {
  if (!(T.hull().epsilon_image() == T.hull())) return false;
  const GroupContext& ctx = *T.context();
  for (const auto& t : T.points())
    if (!T.contains(ctx.apply_automorphism(t, 1))) return false;
  return true;
}

bool is_epsilon_invariant(const TorusCharacter& theta) {
  const RationalTorus& T = *theta.torus();
  const GroupContext& ctx = *T.context();
  for (const auto& g : T.generators()) {
    const Mat eg = ctx.apply_automorphism(g, 1);
    if (!T.contains(eg)) return false;
    if (theta.exponent_at(eg) != theta.exponent_at(g)) return false;
  }
  return true;
}

}  // namespace dlchar

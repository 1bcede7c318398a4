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
#ifndef DLCHAR_TORUS_HPP
#define DLCHAR_TORUS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlchar/cyclotomic.hpp"
#include "dlchar/fp_linear.hpp"
#include "dlchar/group_context.hpp"
#include "dlchar/matrix.hpp"

namespace dlchar {

// Largest hull (as a set) we are willing to enumerate.
inline constexpr std::uint64_t kMaxHullElements = 1u << 20;

// A commutative subalgebra of n x n matrices over the ambient field, stored as
// a GF(p)-subspace.  Tori are unit groups of hulls; normalizers and
// transporters are computed on hulls because at tiny q the point group of a
// torus can be too small to see its Weyl group.
class Hull {
 public:
  // The algebra generated by `gens` over GF(p^scalar_degree) (a subfield of
  // the ambient field).
  static Hull generated_by(ContextPtr ctx, std::span<const Mat> gens, unsigned scalar_degree);

  const ContextPtr& context() const { return ctx_; }
  std::size_t dimension() const { return space_.dim(); }
  const std::vector<Mat>& basis() const { return basis_; }
  bool contains(const Mat& x) const;
  bool is_commutative() const;

  // g A g^{-1}.
  Hull conjugated(const Mat& g) const;
  // g A g^{-1} == other.
  bool conjugates_onto(const Mat& g, const Hull& other) const;
  // Image under the algebra action of eps.
  Hull epsilon_image() const;

  // Every element of the hull, sorted.
  std::vector<Mat> elements() const;

  FpVector vectorize(const Mat& x) const;
  Mat devectorize(const FpVector& v) const;

  friend bool operator==(const Hull& a, const Hull& b) { return a.space_ == b.space_; }

 private:
  Hull(ContextPtr ctx, FpSubspace space);
  void rebuild_basis();

  ContextPtr ctx_;
  FpSubspace space_;
  std::vector<Mat> basis_;
};

// Which group a torus lives in: G (the eps-fixed group) or G~.
enum class TorusLevel { kFixed, kAmbient };

// Rational points of a maximal torus together with a decomposition
// P = <g_1> x ... x <g_r>, |g_i| = d_i, and the coordinate table P -> prod Z/d_i.
class RationalTorus {
 public:
  RationalTorus(ContextPtr ctx, Hull hull, TorusLevel level, std::string label);

  const ContextPtr& context() const { return ctx_; }
  const Hull& hull() const { return hull_; }
  TorusLevel level() const { return level_; }
  const std::string& label() const { return label_; }

  const std::vector<Mat>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Mat& t) const { return index_.count(t) != 0; }
  std::optional<std::uint32_t> index_of(const Mat& t) const;

  const std::vector<Mat>& generators() const { return generators_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::span<const std::uint32_t> coordinates(std::uint32_t point_index) const;
  std::span<const std::uint32_t> coordinates(const Mat& t) const;
  Mat from_coordinates(std::span<const std::uint32_t> coords) const;

  // Degrees of the simple factors of the hull over the torus's scalar field
  // (GF(q) for tori of G, the ambient field for tori of G~).
  const std::vector<unsigned>& factor_degrees() const { return factor_degrees_; }
  bool is_full_unit_group() const { return full_units_; }

 private:
  void decompose_by_idempotents(const std::vector<Mat>& hull_elements);
  void decompose_generic();
  void build_coordinates();

  ContextPtr ctx_;
  Hull hull_;
  TorusLevel level_;
  std::string label_;
  bool full_units_ = false;
  std::vector<Mat> points_;
  std::unordered_map<Mat, std::uint32_t> index_;
  std::vector<Mat> generators_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> coords_;  // size() * rank, row per point
  std::vector<unsigned> factor_degrees_;
};

using TorusPtr = std::shared_ptr<const RationalTorus>;

// theta(g_i) = zeta_N^{(N/d_i) a_i}, N = lcm(d_i).
class TorusCharacter {
 public:
  TorusCharacter(TorusPtr torus, std::vector<std::uint32_t> exponents);

  const TorusPtr& torus() const { return torus_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t conductor() const { return conductor_; }
  bool is_trivial() const;

  // e with theta(t) = zeta_N^e.
  std::uint32_t exponent_at_index(std::uint32_t point_index) const { return values_[point_index]; }
  std::uint32_t exponent_at(const Mat& t) const;
  CycloNumber value(const Mat& t) const;

  static std::vector<TorusCharacter> all(const TorusPtr& torus);

 private:
  TorusPtr torus_;
  std::vector<std::uint32_t> exponents_;
  std::uint32_t conductor_ = 1;
  std::vector<std::uint32_t> values_;  // exponent per point index
};

// Block-diagonal torus whose i-th block is GF(q^{lambda_i}) acting on itself
// through a companion matrix.
TorusPtr torus_from_partition(const ContextPtr& ctx, const std::vector<unsigned>& partition,
                              TorusLevel level = TorusLevel::kFixed);
// The torus whose hull is spanned by 1, s, ..., s^{n-1}.
// An empty label is replaced by the factor type, e.g. "type(2)".
TorusPtr torus_of_regular_element(const ContextPtr& ctx, const Mat& s, TorusLevel level, std::string label = "");
// G = SO_2(GF(q)) as a torus of itself (transpose-inverse mode).
TorusPtr orthogonal_torus(const ContextPtr& ctx);
// C_{G~}(T): the unit group of the commutant of the hull of T.
TorusPtr centralizer_torus(const TorusPtr& T);
// The torus with hull g A g^{-1} (same level).
TorusPtr conjugate_torus(const TorusPtr& T, const Mat& g, std::string label);

// theta o N as a character of T~.  Throws PreconditionViolated if N maps
// some point of T~ outside T.
TorusCharacter compose_with_norm(const TorusCharacter& theta, const TorusPtr& T_tilde);
CycloNumber evaluate_character(const TorusCharacter& theta, const Mat& t);

bool is_epsilon_invariant(const RationalTorus& T);
bool is_epsilon_invariant(const TorusCharacter& theta);

std::string partition_label(const std::vector<unsigned>& partition);
std::vector<std::vector<unsigned>> partitions_of(unsigned n);

}  // namespace dlchar

#endif  // DLCHAR_TORUS_HPP

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
#ifndef DLCHAR_GROUP_CONTEXT_HPP
#define DLCHAR_GROUP_CONTEXT_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlchar/finite_field.hpp"
#include "dlchar/matrix.hpp"

namespace dlchar {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class AutomorphismKind {
  kFieldFrobenius,     // entrywise x -> x^q on GL_n(GF(q^ell)); fixed group GL_n(GF(q))
  kTransposeInverse,   // g -> (g^t)^{-1} on GL_2(GF(q)); fixed group SO_2(GF(q))
};

struct AutomorphismDesc {
  AutomorphismKind kind;
  unsigned order;  // ell
};

// The pair G~(k) >= G(k) together with the automorphism eps.  Immutable after
// construction apart from the lazily filled element caches and the scan
// counter, both of which are thread-safe.
class GroupContext {
 public:
  static std::shared_ptr<const GroupContext> create(AutomorphismKind kind, unsigned n, unsigned q, unsigned ell,
                                                    std::uint64_t budget = kDefaultBudget);

  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  unsigned ell() const { return auto_.order; }
  unsigned characteristic() const { return p_; }
  unsigned base_degree() const { return base_degree_; }
  unsigned ambient_degree() const { return ambient_degree_; }
  const AutomorphismDesc& automorphism() const { return auto_; }
  AutomorphismKind kind() const { return auto_.kind; }
  std::uint64_t budget() const { return budget_; }

  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }
  const Field& ambient_field() const { return tower_->field(ambient_degree_); }
  const Field& base_field() const { return tower_->field(base_degree_); }
  const MatOps& ops() const { return ops_; }

  // Group orders from the closed formulas, saturating at UINT64_MAX.
  std::uint64_t ambient_order() const;
  std::uint64_t fixed_order() const;
  std::uint64_t order(bool fixed) const { return fixed ? fixed_order() : ambient_order(); }

  // All elements of G(k) (fixed) or G~(k), sorted in enumeration order.
  // Throws BudgetExceeded when the group is larger than the budget.
  const std::vector<Mat>& elements(bool fixed) const;
  bool contains(const Mat& g, bool fixed) const;

  // Base field GF(q) inside the ambient field.
  Elem embed_base(Elem code_in_base) const;
  std::optional<Elem> to_base(Elem ambient_code) const;
  bool is_base_matrix(const Mat& g) const;
  // Ambient codes of the base-field elements, ascending.
  const std::vector<Elem>& base_alphabet() const { return base_alphabet_; }

  Mat apply_automorphism(const Mat& g, std::int64_t exponent) const;
  // Action of eps^exponent on matrix subalgebras: entrywise Frobenius, or
  // transposition for the transpose-inverse mode (its differential is
  // X -> -X^t, and a subspace is stable under that iff it is stable under
  // transposition).
  Mat apply_to_algebra(const Mat& x, std::int64_t exponent) const;

  Mat norm(const Mat& g) const;
  Mat twisted_conjugate(const Mat& h, const Mat& g) const;
  bool is_regular_semisimple(const Mat& g) const;
  // Regularity inside G.  SO_2 is a torus, so every element of it is regular there.
  bool is_regular_in_fixed_subgroup(const Mat& g) const;

  std::vector<Mat> centralizer(const Mat& g, bool fixed) const;
  std::vector<Mat> normalizer_of_set(std::span<const Mat> set, bool fixed) const;

  std::uint64_t elements_scanned() const { return scanned_.load(); }
  void count_scanned(std::uint64_t k) const { scanned_.fetch_add(k); }

  std::string describe() const;

 private:
  GroupContext() = default;
  std::vector<Mat> enumerate(bool fixed) const;

  unsigned n_ = 0, q_ = 0, p_ = 0;
  unsigned base_degree_ = 0, ambient_degree_ = 0;
  AutomorphismDesc auto_{};
  std::uint64_t budget_ = kDefaultBudget;
  std::shared_ptr<const FieldTower> tower_;
  MatOps ops_;
  std::vector<Elem> base_alphabet_;

  mutable std::once_flag once_[2];
  mutable std::vector<Mat> cache_[2];
  mutable std::atomic<std::uint64_t> scanned_{0};
};

using ContextPtr = std::shared_ptr<const GroupContext>;

}  // namespace dlchar

#endif  // DLCHAR_GROUP_CONTEXT_HPP

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
#ifndef DLCHAR_FP_LINEAR_HPP
#define DLCHAR_FP_LINEAR_HPP

#include <cstdint>
#include <vector>

namespace dlchar {

using FpVector = std::vector<std::uint32_t>;

// A subspace of GF(p)^d kept in reduced row echelon form, so two subspaces
// are equal iff their bases are equal.
class FpSubspace {
 public:
  FpSubspace(unsigned p, std::size_t ambient_dim) : p_(p), dim_(ambient_dim) {}

  unsigned characteristic() const { return p_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FpVector>& basis() const { return rows_; }

  // Returns true if v was not already in the span.
  bool insert(const FpVector& v);
  bool contains(const FpVector& v) const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  FpVector reduce(FpVector v) const;

  unsigned p_;
  std::size_t dim_;
  std::vector<FpVector> rows_;  // RREF
  std::vector<std::size_t> pivots_;
};

// Basis of {x : M x = 0} where M is given by its columns.
std::vector<FpVector> fp_nullspace(unsigned p, const std::vector<FpVector>& columns);

}  // namespace dlchar

#endif  // DLCHAR_FP_LINEAR_HPP

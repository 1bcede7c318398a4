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
#include "dlchar/fp_linear.hpp"

#include <algorithm>

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

std::uint32_t inv_mod(std::uint32_t a, unsigned p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

}  // namespace

FpVector FpSubspace::reduce(FpVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      v[k] = std::uint32_t((v[k] + std::uint64_t(p_ - c) * rows_[r][k]) % p_);
  }
  return v;
}

bool FpSubspace::contains(const FpVector& v) const {
  if (v.size() != dim_) throw InvalidArgument("vector has wrong dimension");
  const FpVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

bool FpSubspace::insert(const FpVector& v) {
  if (v.size() != dim_) throw InvalidArgument("vector has wrong dimension");
  FpVector r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const std::uint32_t s = inv_mod(r[piv], p_);
  for (auto& c : r) c = std::uint32_t(std::uint64_t(c) * s % p_);
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    const std::uint32_t c = row[piv];
    if (c == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) row[k] = std::uint32_t((row[k] + std::uint64_t(p_ - c) * r[k]) % p_);
  }
  // Keep rows sorted by pivot column.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + std::ptrdiff_t(pos), std::move(r));
  pivots_.insert(pivots_.begin() + std::ptrdiff_t(pos), piv);
  return true;
}

std::vector<FpVector> fp_nullspace(unsigned p, const std::vector<FpVector>& columns) {
  const std::size_t ncols = columns.size();
  if (ncols == 0) return {};
  const std::size_t nrows = columns[0].size();
  std::vector<FpVector> m(nrows, FpVector(ncols));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < nrows; ++i) m[i][j] = columns[j][i] % p;

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t sel = row;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    const std::uint32_t s = inv_mod(m[row][col], p);
    for (auto& c : m[row]) c = std::uint32_t(std::uint64_t(c) * s % p);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const std::uint32_t c = m[i][col];
      for (std::size_t k = 0; k < ncols; ++k) m[i][k] = std::uint32_t((m[i][k] + std::uint64_t(p - c) * m[row][k]) % p);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<FpVector> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dlchar

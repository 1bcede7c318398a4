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
#ifndef DLCHAR_MATRIX_HPP
#define DLCHAR_MATRIX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dlchar/finite_field.hpp"

namespace dlchar {

inline constexpr unsigned kMaxDim = 5;

// Square matrix of element codes, row-major.  The field is not stored; every
// operation goes through a MatOps bound to the field the entries live in.
// Ordering is lexicographic over the row-major entry codes, which is also the
// group enumeration order.
struct Mat {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kMaxDim * kMaxDim> a{};

  Mat() = default;
  explicit Mat(unsigned dim) : n(std::uint8_t(dim)) {}

  Elem operator()(unsigned i, unsigned j) const { return a[i * n + j]; }
  void set(unsigned i, unsigned j, Elem v) { a[i * n + j] = std::uint16_t(v); }
  unsigned entries() const { return unsigned(n) * n; }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.n != y.n) return false;
    for (unsigned k = 0; k < x.entries(); ++k)
      if (x.a[k] != y.a[k]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const Mat& x, const Mat& y) {
    if (x.n != y.n) return x.n <=> y.n;
    for (unsigned k = 0; k < x.entries(); ++k)
      if (x.a[k] != y.a[k]) return x.a[k] <=> y.a[k];
    return std::strong_ordering::equal;
  }
};

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ m.n;
    for (unsigned k = 0; k < m.entries(); ++k) {
      h ^= m.a[k];
      h *= 1099511628211ull;
    }
    return std::size_t(h ^ (h >> 29));
  }
};

// Polynomials over a field, constant term first, no trailing zeros (the zero
// polynomial is empty).
using Poly = std::vector<Elem>;

Poly poly_trim(Poly f);
Poly poly_derivative(const Field& F, const Poly& f);
Poly poly_mod(const Field& F, Poly a, const Poly& b);
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

class MatOps {
 public:
  MatOps() = default;
  MatOps(const Field& field, unsigned n) : F_(&field), n_(n) {}

  const Field& field() const { return *F_; }
  unsigned dim() const { return n_; }

  Mat zero() const { return Mat(n_); }
  Mat identity() const;
  Mat scalar(Elem c) const;
  Mat diagonal(const std::vector<Elem>& d) const;

  Mat add(const Mat& x, const Mat& y) const;
  Mat sub(const Mat& x, const Mat& y) const;
  Mat mul(const Mat& x, const Mat& y) const;
  Mat scale(Elem c, const Mat& x) const;
  Mat transpose(const Mat& x) const;
  Mat frobenius(const Mat& x, std::int64_t steps) const;
  Mat pow(const Mat& x, std::uint64_t e) const;

  Elem det(const Mat& x) const;
  bool invertible(const Mat& x) const { return det(x) != 0; }
  // Throws InvalidArgument on singular input.
  Mat inverse(const Mat& x) const;
  Mat conjugate(const Mat& g, const Mat& x) const { return mul(mul(g, x), inverse(g)); }
  bool commute(const Mat& x, const Mat& y) const { return mul(x, y) == mul(y, x); }

  // det(X - x), monic of degree n.
  Poly charpoly(const Mat& x) const;

  // Calls fn on every invertible matrix with entries drawn from `alphabet`,
  // in row-major lexicographic order of codes.  `alphabet` must be sorted.
  void for_each_invertible(const std::vector<Elem>& alphabet, const std::function<void(const Mat&)>& fn) const;

 private:
  const Field* F_ = nullptr;
  unsigned n_ = 0;
};

}  // namespace dlchar

template <>
struct std::hash<dlchar::Mat> : dlchar::MatHash {};

#endif  // DLCHAR_MATRIX_HPP

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
#include "dlchar/matrix.hpp"

#include "dlchar/errors.hpp"

namespace dlchar {

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_derivative(const Field& F, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(F.from_int(std::int64_t(i)), f[i]));
  return poly_trim(std::move(d));
}

Poly poly_mod(const Field& F, Poly a, const Poly& b) {
  a = poly_trim(std::move(a));
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  const Elem lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_trim(std::move(r));
}

namespace {

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  return poly_trim(std::move(r));
}

Poly poly_neg(const Field& F, Poly a) {
  for (auto& c : a) c = F.neg(c);
  return a;
}

// Cofactor expansion along the first row of a polynomial matrix.
Poly poly_det(const Field& F, const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    Poly term = poly_mul(F, m[0][j], poly_det(F, minor));
    total = poly_add(F, total, j % 2 ? poly_neg(F, term) : term);
  }
  return total;
}

}  // namespace

Mat MatOps::identity() const { return scalar(1); }

Mat MatOps::scalar(Elem c) const {
  Mat r(n_);
  for (unsigned i = 0; i < n_; ++i) r.set(i, i, c);
  return r;
}

Mat MatOps::diagonal(const std::vector<Elem>& d) const {
  if (d.size() != n_) throw InvalidArgument("diagonal has wrong length");
  Mat r(n_);
  for (unsigned i = 0; i < n_; ++i) r.set(i, i, d[i]);
  return r;
}

Mat MatOps::add(const Mat& x, const Mat& y) const {
  Mat r(n_);
  for (unsigned k = 0; k < n_ * n_; ++k) r.a[k] = std::uint16_t(F_->add(x.a[k], y.a[k]));
  return r;
}

Mat MatOps::sub(const Mat& x, const Mat& y) const {
  Mat r(n_);
  for (unsigned k = 0; k < n_ * n_; ++k) r.a[k] = std::uint16_t(F_->sub(x.a[k], y.a[k]));
  return r;
}

Mat MatOps::mul(const Mat& x, const Mat& y) const {
  Mat r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      Elem s = 0;
      for (unsigned k = 0; k < n_; ++k) s = F_->add(s, F_->mul(x.a[i * n_ + k], y.a[k * n_ + j]));
      r.a[i * n_ + j] = std::uint16_t(s);
    }
  }
  return r;
}

Mat MatOps::scale(Elem c, const Mat& x) const {
  Mat r(n_);
  for (unsigned k = 0; k < n_ * n_; ++k) r.a[k] = std::uint16_t(F_->mul(c, x.a[k]));
  return r;
}

Mat MatOps::transpose(const Mat& x) const {
  Mat r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) r.a[j * n_ + i] = x.a[i * n_ + j];
  return r;
}

Mat MatOps::frobenius(const Mat& x, std::int64_t steps) const {
  Mat r(n_);
  for (unsigned k = 0; k < n_ * n_; ++k) r.a[k] = std::uint16_t(F_->frobenius(x.a[k], steps));
  return r;
}

Mat MatOps::pow(const Mat& x, std::uint64_t e) const {
  Mat r = identity();
  Mat b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem MatOps::det(const Mat& x) const {
  if (n_ == 1) return x.a[0];
  if (n_ == 2) return F_->sub(F_->mul(x.a[0], x.a[3]), F_->mul(x.a[1], x.a[2]));
  Mat m = x;
  Elem d = 1;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = c;
    while (piv < n_ && m(piv, c) == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (unsigned k = 0; k < n_; ++k) std::swap(m.a[piv * n_ + k], m.a[c * n_ + k]);
      d = F_->neg(d);
    }
    const Elem pv = m(c, c);
    d = F_->mul(d, pv);
    const Elem pinv = F_->inv(pv);
    for (unsigned r = c + 1; r < n_; ++r) {
      const Elem f = F_->mul(m(r, c), pinv);
      if (f == 0) continue;
      for (unsigned k = c; k < n_; ++k) m.set(r, k, F_->sub(m(r, k), F_->mul(f, m(c, k))));
    }
  }
  return d;
}

Mat MatOps::inverse(const Mat& x) const {
  if (n_ == 2) {
    const Elem d = det(x);
    if (d == 0) throw InvalidArgument("matrix is singular");
    const Elem di = F_->inv(d);
    Mat r(2);
    r.a[0] = std::uint16_t(F_->mul(x.a[3], di));
    r.a[1] = std::uint16_t(F_->neg(F_->mul(x.a[1], di)));
    r.a[2] = std::uint16_t(F_->neg(F_->mul(x.a[2], di)));
    r.a[3] = std::uint16_t(F_->mul(x.a[0], di));
    return r;
  }
  Mat m = x;
  Mat r = identity();
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = c;
    while (piv < n_ && m(piv, c) == 0) ++piv;
    if (piv == n_) throw InvalidArgument("matrix is singular");
    if (piv != c) {
      for (unsigned k = 0; k < n_; ++k) {
        std::swap(m.a[piv * n_ + k], m.a[c * n_ + k]);
        std::swap(r.a[piv * n_ + k], r.a[c * n_ + k]);
      }
    }
    const Elem pinv = F_->inv(m(c, c));
    for (unsigned k = 0; k < n_; ++k) {
      m.set(c, k, F_->mul(m(c, k), pinv));
      r.set(c, k, F_->mul(r(c, k), pinv));
    }
    for (unsigned row = 0; row < n_; ++row) {
      if (row == c) continue;
      const Elem f = m(row, c);
      if (f == 0) continue;
      for (unsigned k = 0; k < n_; ++k) {
        m.set(row, k, F_->sub(m(row, k), F_->mul(f, m(c, k))));
        r.set(row, k, F_->sub(r(row, k), F_->mul(f, r(c, k))));
      }
    }
  }
  return r;
}

Poly MatOps::charpoly(const Mat& x) const {
  std::vector<std::vector<Poly>> m(n_, std::vector<Poly>(n_));
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) {
      Poly e{F_->neg(x(i, j))};
      if (i == j) e.push_back(1);
      m[i][j] = poly_trim(std::move(e));
    }
  return poly_det(*F_, m);
}

void MatOps::for_each_invertible(const std::vector<Elem>& alphabet, const std::function<void(const Mat&)>& fn) const {
  const unsigned cells = n_ * n_;
  const std::size_t q = alphabet.size();
  std::vector<std::size_t> idx(cells, 0);
  Mat m(n_);
  for (unsigned k = 0; k < cells; ++k) m.a[k] = std::uint16_t(alphabet[0]);
  while (true) {
    if (det(m) != 0) fn(m);
    // Odometer with the last entry varying fastest.
    int k = int(cells) - 1;
    while (k >= 0) {
      if (++idx[k] < q) {
        m.a[k] = std::uint16_t(alphabet[idx[k]]);
        break;
      }
      idx[k] = 0;
      m.a[k] = std::uint16_t(alphabet[0]);
      --k;
    }
    if (k < 0) break;
  }
}

}  // namespace dlchar

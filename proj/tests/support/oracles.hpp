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
#ifndef DLCHAR_TESTS_ORACLES_HPP
#define DLCHAR_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests.  None of
// these touch the library's log tables, hulls or cyclotomic reduction.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dlchar/cyclotomic.hpp"

namespace oracle {

// GF(p)[x]/(f) with elements as coefficient vectors, constant term first.
class PolyField {
 public:
  PolyField(unsigned p, std::vector<unsigned> modulus) : p_(p), f_(std::move(modulus)), m_(unsigned(f_.size() - 1)) {}

  unsigned size() const {
    unsigned s = 1;
    for (unsigned i = 0; i < m_; ++i) s *= p_;
    return s;
  }
  std::vector<unsigned> from_code(std::uint32_t c) const {
    std::vector<unsigned> v(m_);
    for (unsigned i = 0; i < m_; ++i, c /= p_) v[i] = c % p_;
    return v;
  }
  std::uint32_t to_code(const std::vector<unsigned>& v) const {
    std::uint32_t c = 0;
    for (unsigned i = m_; i-- > 0;) c = c * p_ + v[i];
    return c;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = from_code(a), y = from_code(b);
    for (unsigned i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return to_code(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = from_code(a), y = from_code(b);
    std::vector<unsigned> r(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    // f is monic: x^m = -(f_0 + ... + f_{m-1} x^{m-1}).
    for (unsigned k = 2 * m_; k-- > m_;) {
      const unsigned c = r[k];
      if (!c) continue;
      r[k] = 0;
      for (unsigned i = 0; i < m_; ++i) r[k - m_ + i] = (r[k - m_ + i] + (p_ - c) * f_[i]) % p_;
    }
    r.resize(m_);
    return to_code(r);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  // Multiplicative order by repeated multiplication.
  std::uint64_t order(std::uint32_t a) const {
    std::uint32_t one = 1, x = a;
    std::uint64_t k = 1;
    while (x != one) {
      x = mul(x, a);
      ++k;
      if (k > size()) return 0;
    }
    return k;
  }

 private:
  unsigned p_;
  std::vector<unsigned> f_;
  unsigned m_;
};

// The class of x has order p^m - 1 in GF(p)[x]/(f), by repeated multiplication.
inline bool is_primitive(unsigned p, const std::vector<unsigned>& f) {
  PolyField F(p, f);
  const std::uint32_t x = F.size() > 2 ? p : 1;  // code of the class of x
  if (f.size() == 2) {
    // Degree 1: the root is -f0.
    const unsigned r = (p - f[0]) % p;
    if (r == 0) return false;
    unsigned k = 1, y = r;
    while (y != 1) y = (y * r) % p, ++k;
    return k == p - 1;
  }
  return F.order(x) == F.size() - 1;
}

inline std::complex<double> evaluate(const dlchar::CycloNumber& v) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi / v.conductor()), acc = 0, zi = 1;
  for (const auto& c : v.coefficients()) {
    acc += c.get_d() * zi;
    zi *= z;
  }
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-7; }

}  // namespace oracle

#endif  // DLCHAR_TESTS_ORACLES_HPP

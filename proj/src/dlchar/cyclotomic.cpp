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
#include "dlchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "dlchar/errors.hpp"

namespace dlchar {

namespace {

std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  // b is monic
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t s = 0; s <= db; ++s) a[k - db + s] -= c * b[s];
  }
  for (std::size_t k = 0; k < db; ++k)
    if (a[k] != 0) throw InternalError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t N) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  if (N == 0) throw InvalidArgument("conductor must be positive");
  std::vector<std::int64_t> f(N + 1, 0);
  f[0] = -1;
  f[N] = 1;
  for (std::uint32_t d = 1; d < N; ++d)
    if (N % d == 0) f = exact_divide(std::move(f), cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(f)).first->second;
}

std::uint32_t euler_phi(std::uint32_t N) {
  std::uint32_t result = N, m = N;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloNumber::CycloNumber(std::uint32_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw InvalidArgument("conductor must be positive");
  coeffs_.assign(euler_phi(conductor), mpq_class(0));
}

std::vector<mpq_class> CycloNumber::reduce(std::uint32_t N, std::vector<mpq_class> full) {
  const auto& phi = cyclotomic_polynomial(N);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = full.size(); k-- > deg;) {
    if (full[k] == 0) continue;
    const mpq_class c = full[k];
    for (std::size_t s = 0; s <= deg; ++s)
      if (phi[s] != 0) full[k - deg + s] -= c * phi[s];
  }
  full.resize(deg, mpq_class(0));
  return full;
}

CycloNumber CycloNumber::integer(std::int64_t v, std::uint32_t conductor) {
  CycloNumber r(conductor);
  r.coeffs_[0] = mpq_class(static_cast<long>(v));
  return r;
}

CycloNumber CycloNumber::root_of_unity(std::uint32_t conductor, std::int64_t k) {
  std::vector<std::int64_t> counts(conductor, 0);
  std::int64_t e = k % std::int64_t(conductor);
  if (e < 0) e += conductor;
  counts[e] = 1;
  return from_power_counts(conductor, counts);
}

CycloNumber CycloNumber::from_power_counts(std::uint32_t conductor, std::span<const std::int64_t> counts) {
  if (counts.size() != conductor) throw InvalidArgument("power counts must have one entry per root of unity");
  std::vector<mpq_class> full(conductor);
  for (std::size_t k = 0; k < conductor; ++k) full[k] = mpq_class(static_cast<long>(counts[k]));
  CycloNumber r(conductor);
  r.coeffs_ = reduce(conductor, std::move(full));
  return r;
}

CycloNumber CycloNumber::from_coefficients(std::uint32_t conductor, std::vector<mpq_class> coeffs) {
  CycloNumber r(conductor);
  if (coeffs.size() != r.coeffs_.size()) throw InvalidArgument("coefficient vector length must equal phi(conductor)");
  for (auto& c : coeffs) c.canonicalize();
  r.coeffs_ = std::move(coeffs);
  return r;
}

std::vector<mpq_class> CycloNumber::expanded(std::uint32_t length) const {
  const std::uint32_t step = length / conductor_;
  std::vector<mpq_class> full(length, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  return full;
}

CycloNumber CycloNumber::lift(std::uint32_t multiple) const {
  if (multiple % conductor_ != 0) throw InvalidArgument("lift target must be a multiple of the conductor");
  if (multiple == conductor_) return *this;
  CycloNumber r(multiple);
  r.coeffs_ = reduce(multiple, expanded(multiple));
  return r;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

CycloNumber CycloNumber::conj() const {
  std::vector<mpq_class> full(conductor_, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[(conductor_ - i) % conductor_] += coeffs_[i];
  CycloNumber r(conductor_);
  r.coeffs_ = reduce(conductor_, std::move(full));
  return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  const std::uint32_t L = std::lcm(conductor_, o.conductor_);
  CycloNumber a = lift(L), b = o.lift(L);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  const std::uint32_t L = std::lcm(conductor_, o.conductor_);
  const auto a = lift(L).expanded(L);
  const auto b = o.lift(L).expanded(L);
  std::vector<mpq_class> full(L, mpq_class(0));
  for (std::uint32_t i = 0; i < L; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < L; ++j)
      if (b[j] != 0) full[(i + j) % L] += a[i] * b[j];
  }
  CycloNumber r(L);
  r.coeffs_ = reduce(L, std::move(full));
  return r;
}

CycloNumber CycloNumber::operator/(const mpq_class& d) const {
  if (d == 0) throw InvalidArgument("division by zero");
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c /= d;
  return r;
}

CycloNumber CycloNumber::operator*(const mpq_class& d) const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c *= d;
  return r;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  const std::uint32_t L = std::lcm(conductor_, o.conductor_);
  return lift(L).coeffs_ == o.lift(L).coeffs_;
}

std::string CycloNumber::to_string() const {
  std::string out;
  bool any = false, irrational = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (any)
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    const std::string mag_s = mag.get_str();
    if (i == 0) {
      out += mag_s;
    } else {
      if (mag != 1) out += mag_s + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
      irrational = true;
    }
    any = true;
  }
  if (!any) out = "0";
  if (irrational) out += " (z = zeta_" + std::to_string(conductor_) + ")";
  return out;
}

}  // namespace dlchar

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
#include "dlchar/finite_field.hpp"

#include <algorithm>
#include <numeric>

#include "dlchar/errors.hpp"

namespace dlchar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Arithmetic in GF(p)[x]/(f) on coefficient vectors of length deg f.
class QuotientRing {
 public:
  QuotientRing(unsigned p, const ModulusPoly& f) : p_(p), f_(f), m_(f.size() - 1) {}

  using Poly = std::vector<unsigned>;

  Poly one() const {
    Poly r(m_, 0);
    r[0] = 1 % p_;
    return r;
  }

  // The class of x.  For m = 1 this is the root -f_0.
  Poly x() const {
    Poly r(m_, 0);
    if (m_ == 1)
      r[0] = (p_ - f_[0] % p_) % p_;
    else
      r[1] = 1;
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<std::uint64_t> t(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < m_; ++j) t[i + j] = (t[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    }
    for (unsigned k = 2 * m_ - 1; k >= m_; --k) {
      std::uint64_t c = t[k];
      if (c) {
        for (unsigned s = 0; s <= m_; ++s)
          t[k - m_ + s] = (t[k - m_ + s] + (p_ - c) * f_[s]) % p_;
      }
      if (k == m_) break;
    }
    Poly r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = unsigned(t[i]);
    return r;
  }

  Poly pow(Poly base, std::uint64_t e) const {
    Poly r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // g evaluated at y, g given constant term first.
  Poly eval(const ModulusPoly& g, const Poly& y) const {
    Poly r(m_, 0);
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      r = mul(r, y);
      r[0] = (r[0] + *it) % p_;
    }
    return r;
  }

 private:
  unsigned p_;
  const ModulusPoly& f_;
  unsigned m_;
};

bool x_is_primitive(unsigned p, const ModulusPoly& f) {
  const unsigned m = unsigned(f.size() - 1);
  const std::uint64_t order = ipow(p, m) - 1;
  QuotientRing ring(p, f);
  const auto x = ring.x();
  const auto one = ring.one();
  if (ring.pow(x, order) != one) return false;
  for (auto r : prime_factors(order))
    if (ring.pow(x, order / r) == one) return false;
  return true;
}

}  // namespace

ModulusPoly search_conway_polynomial(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidArgument("field degree must be positive");
  if (ipow(p, m) > kMaxFieldSize) throw BudgetExceeded("field GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds size cap");

  std::vector<std::pair<unsigned, ModulusPoly>> lower;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) lower.emplace_back(d, conway_polynomial(p, d));

  // Word (a_{m-1}, ..., a_0) in lexicographic order; coefficient of x^i is
  // (-1)^{m-i} a_i.
  std::vector<unsigned> word(m, 0);
  const std::uint64_t total = ipow(p, m);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (unsigned k = 0; k < m; ++k) {
      word[m - 1 - k] = unsigned(v % p);
      v /= p;
    }
    ModulusPoly f(m + 1, 0);
    f[m] = 1;
    for (unsigned i = 0; i < m; ++i) {
      unsigned a = word[m - 1 - i];
      f[i] = ((m - i) % 2 == 0) ? a : (p - a) % p;
    }
    if (f[0] == 0) continue;
    if (!x_is_primitive(p, f)) continue;
    QuotientRing ring(p, f);
    bool compatible = true;
    for (const auto& [d, g] : lower) {
      auto y = ring.pow(ring.x(), (ipow(p, m) - 1) / (ipow(p, d) - 1));
      auto val = ring.eval(g, y);
      if (std::any_of(val.begin(), val.end(), [](unsigned c) { return c != 0; })) {
        compatible = false;
        break;
      }
    }
    if (compatible) return f;
  }
  throw InternalError("no Conway polynomial found");
}

ModulusPoly conway_polynomial(unsigned p, unsigned m) {
  if (auto t = conway_table_lookup(p, m)) return *t;
  return search_conway_polynomial(p, m);
}

// ---------------------------------------------------------------------------
// Field

Field::Field(unsigned p, unsigned m, ModulusPoly modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (modulus_.size() != m + 1 || modulus_[m] != 1) throw InvalidArgument("modulus must be monic of the field degree");
  const std::uint64_t size = ipow(p, m);
  if (size > kMaxFieldSize) throw BudgetExceeded("field size " + std::to_string(size) + " exceeds cap 65536");
  size_ = std::uint32_t(size);

  QuotientRing ring(p, modulus_);
  const auto x = ring.x();
  auto encode = [&](const std::vector<unsigned>& c) {
    Elem code = 0;
    for (unsigned i = m; i-- > 0;) code = code * p + c[i];
    return code;
  };

  const std::uint32_t n = size_ - 1;
  exp_.assign(2 * std::size_t(n), 0);
  log_.assign(size_, 0);
  auto cur = ring.one();
  for (std::uint32_t i = 0; i < n; ++i) {
    Elem code = encode(cur);
    if (i > 0 && code == 1) throw InvalidArgument("modulus is not primitive");
    exp_[i] = code;
    log_[code] = i;
    cur = ring.mul(cur, x);
  }
  if (encode(cur) != 1) throw InvalidArgument("modulus is not primitive");
  for (std::uint32_t i = 0; i < n; ++i) exp_[n + i] = exp_[i];

  neg_.resize(size_);
  for (Elem a = 0; a < size_; ++a) {
    Elem r = 0, scale = 1, v = a;
    for (unsigned k = 0; k < m; ++k) {
      unsigned d = v % p;
      v /= p;
      r += ((p - d) % p) * scale;
      scale *= p;
    }
    neg_[a] = r;
  }

  if (p != 2 && size_ <= 1024) {
    add_table_.resize(std::size_t(size_) * size_);
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b) add_table_[std::size_t(a) * size_ + b] = std::uint16_t(add_digits(a, b));
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (unsigned k = 0; k < m_; ++k) {
    unsigned d = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    r += d * scale;
    scale *= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const { return neg_[a]; }

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t n = size_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw InvalidArgument("negative power of zero");
    return 0;
  }
  const std::int64_t n = size_ - 1;
  std::int64_t r = (std::int64_t(log_[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[r];
}

Elem Field::frobenius(Elem x, std::int64_t steps) const {
  if (x == 0) return 0;
  std::int64_t s = steps % std::int64_t(m_);
  if (s < 0) s += m_;
  const std::uint64_t n = size_ - 1;
  std::uint64_t e = log_[x];
  for (std::int64_t i = 0; i < s; ++i) e = (e * p_) % n;
  return exp_[e];
}

std::uint32_t Field::log(Elem x) const {
  if (x == 0) throw InvalidArgument("discrete logarithm of zero");
  if (x >= size_) throw InvalidArgument("element code out of range");
  return log_[x];
}

std::vector<unsigned> Field::coefficients(Elem x) const {
  std::vector<unsigned> c(m_);
  for (unsigned k = 0; k < m_; ++k) {
    c[k] = x % p_;
    x /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != m_) throw InvalidArgument("coefficient vector has wrong length");
  Elem code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient not reduced mod p");
    code = code * p_ + coeffs[i];
  }
  return code;
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % std::int64_t(p_);
  if (r < 0) r += p_;
  return Elem(r);
}

std::uint32_t Field::order(Elem x) const {
  const std::uint32_t n = size_ - 1;
  return n / std::gcd(log(x), n);
}

// ---------------------------------------------------------------------------
// FieldTower

std::shared_ptr<const FieldTower> FieldTower::build(unsigned p, const std::set<unsigned>& degrees,
                                                    std::uint64_t size_budget) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (degrees.empty()) throw InvalidArgument("no field degrees requested");
  const std::uint64_t cap = std::min<std::uint64_t>(size_budget, kMaxFieldSize);
  std::shared_ptr<FieldTower> tower(new FieldTower(p));
  for (unsigned m : degrees) {
    if (m == 0) throw InvalidArgument("field degree must be positive");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < m; ++i) {
      size *= p;
      if (size > cap)
        throw BudgetExceeded("field GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds field-size budget " +
                             std::to_string(cap));
    }
    tower->fields_.emplace(m, std::make_unique<Field>(p, m, conway_polynomial(p, m)));
  }
  return tower;
}

std::set<unsigned> FieldTower::degrees() const {
  std::set<unsigned> out;
  for (const auto& [m, f] : fields_) out.insert(m);
  return out;
}

const Field& FieldTower::field(unsigned m) const {
  auto it = fields_.find(m);
  if (it == fields_.end()) throw InvalidArgument("degree " + std::to_string(m) + " is not registered in the tower");
  return *it->second;
}

Elem FieldTower::embed(Elem x, unsigned from_degree, unsigned to_degree) const {
  if (to_degree % from_degree != 0)
    throw InvalidArgument("no embedding GF(p^" + std::to_string(from_degree) + ") -> GF(p^" + std::to_string(to_degree) + ")");
  const Field& src = field(from_degree);
  const Field& dst = field(to_degree);
  if (x == 0) return 0;
  const std::uint64_t k = (std::uint64_t(dst.size()) - 1) / (src.size() - 1);
  return dst.exp(std::uint64_t(src.log(x)) * k);
}

std::optional<Elem> FieldTower::restrict(Elem x, unsigned from_degree, unsigned to_degree) const {
  if (from_degree % to_degree != 0)
    throw InvalidArgument("GF(p^" + std::to_string(to_degree) + ") is not a subfield of GF(p^" + std::to_string(from_degree) + ")");
  const Field& big = field(from_degree);
  const Field& small = field(to_degree);
  if (x == 0) return Elem(0);
  const std::uint64_t k = (std::uint64_t(big.size()) - 1) / (small.size() - 1);
  const std::uint32_t l = big.log(x);
  if (l % k != 0) return std::nullopt;
  return small.exp(l / k);
}

FieldElement FieldTower::element(unsigned m, Elem code) const {
  if (code >= field(m).size()) throw InvalidArgument("element code out of range");
  return FieldElement(shared_from_this(), m, code);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::shared_ptr<const FieldTower> tower, unsigned degree, Elem code)
    : tower_(std::move(tower)), degree_(degree), code_(code) {}

const Field& FieldElement::field() const { return tower_->field(degree_); }

std::vector<unsigned> FieldElement::coefficients() const { return field().coefficients(code_); }

FieldElement FieldElement::frobenius(std::int64_t steps) const {
  return FieldElement(tower_, degree_, field().frobenius(code_, steps));
}

std::uint32_t FieldElement::discrete_log() const { return field().log(code_); }

FieldElement FieldElement::embed(unsigned to_degree) const {
  return FieldElement(tower_, to_degree, tower_->embed(code_, degree_, to_degree));
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (tower_ != o.tower_ || degree_ != o.degree_) throw InvalidArgument("field elements live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(tower_, degree_, field().add(code_, o.code_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(tower_, degree_, field().sub(code_, o.code_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(tower_, degree_, field().mul(code_, o.code_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(tower_, degree_, field().div(code_, o.code_));
}

}  // namespace dlchar

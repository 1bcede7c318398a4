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
#ifndef DLCHAR_FINITE_FIELD_HPP
#define DLCHAR_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dlchar {

// An element of GF(p^m) is stored as the integer sum c_i p^i of its
// coefficient vector in the basis 1, x, ..., x^{m-1}.  Codes fit in 16 bits
// because field sizes are capped at 2^16.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = 1u << 16;

bool is_prime(std::uint64_t n);

// Monic modulus polynomials are coefficient lists, constant term first.
using ModulusPoly = std::vector<unsigned>;

// Conway polynomial from the built-in table, if present.
std::optional<ModulusPoly> conway_table_lookup(unsigned p, unsigned m);

// Conway polynomial by its defining search: the least monic primitive
// polynomial in Conway order compatible with all proper-divisor degrees.
ModulusPoly search_conway_polynomial(unsigned p, unsigned m);

// Conway polynomial, preferring the table.
ModulusPoly conway_polynomial(unsigned p, unsigned m);

// GF(p^m) with log/antilog tables.  The multiplicative generator is the class
// of x, which is primitive for every modulus produced by conway_polynomial.
class Field {
 public:
  Field(unsigned p, unsigned m, ModulusPoly modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t size() const { return size_; }
  const ModulusPoly& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem generator() const { return exp_[1 % (size_ - 1)]; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // x -> x^(p^steps); steps may be negative.
  Elem frobenius(Elem x, std::int64_t steps) const;

  // Exponent e in [0, size-1) with generator^e == x.  Throws on zero.
  std::uint32_t log(Elem x) const;
  Elem exp(std::uint64_t e) const { return exp_[e % (size_ - 1)]; }

  std::vector<unsigned> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;
  // Image of an integer under Z -> GF(p).
  Elem from_int(std::int64_t v) const;

  // Multiplicative order of a nonzero element.
  std::uint32_t order(Elem x) const;

 private:
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_;
  unsigned m_;
  std::uint32_t size_;
  ModulusPoly modulus_;
  std::vector<Elem> exp_;          // length 2*(size-1), so log a + log b needs no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<std::uint16_t> add_table_;  // only for small odd-characteristic fields
};

class FieldTower;

// A value type pairing an element code with its field inside a tower.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FieldTower> tower, unsigned degree, Elem code);

  unsigned degree() const { return degree_; }
  Elem code() const { return code_; }
  const Field& field() const;
  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }

  std::vector<unsigned> coefficients() const;
  FieldElement frobenius(std::int64_t steps) const;
  std::uint32_t discrete_log() const;
  FieldElement embed(unsigned to_degree) const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const {
    return tower_ == o.tower_ && degree_ == o.degree_ && code_ == o.code_;
  }

 private:
  void check_same_field(const FieldElement& o) const;

  std::shared_ptr<const FieldTower> tower_;
  unsigned degree_;
  Elem code_;
};

// Fields GF(p^m) for a set of registered degrees m, with embeddings
// GF(p^a) -> GF(p^b) for a | b.  Since all moduli are Conway polynomials the
// generator of GF(p^a) maps to generator^((p^b-1)/(p^a-1)) of GF(p^b), which
// makes the embeddings compatible along chains a | b | c.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  static std::shared_ptr<const FieldTower> build(unsigned p, const std::set<unsigned>& degrees,
                                                 std::uint64_t size_budget = kMaxFieldSize);

  unsigned characteristic() const { return p_; }
  std::set<unsigned> degrees() const;
  bool has_degree(unsigned m) const { return fields_.count(m) != 0; }
  const Field& field(unsigned m) const;

  Elem embed(Elem x, unsigned from_degree, unsigned to_degree) const;
  // Preimage of x under embed(from=to_degree, to=from_degree), if x lies in the subfield.
  std::optional<Elem> restrict(Elem x, unsigned from_degree, unsigned to_degree) const;

  FieldElement element(unsigned m, Elem code) const;

 private:
  FieldTower(unsigned p) : p_(p) {}

  unsigned p_;
  std::map<unsigned, std::unique_ptr<Field>> fields_;
};

}  // namespace dlchar

#endif  // DLCHAR_FINITE_FIELD_HPP

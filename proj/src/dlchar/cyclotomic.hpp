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
#ifndef DLCHAR_CYCLOTOMIC_HPP
#define DLCHAR_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dlchar {

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t N);
std::uint32_t euler_phi(std::uint32_t N);

// An element of Q(zeta_N) written in the power basis 1, z, ..., z^{phi(N)-1},
// z = exp(2 pi i / N).  The representation is canonical for a fixed
// conductor; values with different conductors are compared after lifting both
// to the lcm.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(1) {}
  explicit CycloNumber(std::uint32_t conductor);

  static CycloNumber zero(std::uint32_t conductor = 1) { return CycloNumber(conductor); }
  static CycloNumber integer(std::int64_t v, std::uint32_t conductor = 1);
  static CycloNumber root_of_unity(std::uint32_t conductor, std::int64_t k);
  // sum_k counts[k] z^k with counts of length N.
  static CycloNumber from_power_counts(std::uint32_t conductor, std::span<const std::int64_t> counts);
  // Coefficients in the canonical basis; length must be phi(N).
  static CycloNumber from_coefficients(std::uint32_t conductor, std::vector<mpq_class> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  CycloNumber lift(std::uint32_t multiple) const;
  bool is_zero() const;
  // All coefficients are integers, i.e. the value lies in Z[zeta_N].
  bool is_integral() const;
  // Complex conjugation z -> z^{-1}.
  CycloNumber conj() const;

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber operator/(const mpq_class& d) const;
  CycloNumber operator*(const mpq_class& d) const;

  // Equality as elements of C.
  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  // Readable form, e.g. "-1 - 2*z^3 (z = zeta_8)".
  std::string to_string() const;

 private:
  // Reduces a length-N vector of z^k coefficients modulo Phi_N.
  static std::vector<mpq_class> reduce(std::uint32_t N, std::vector<mpq_class> full);
  std::vector<mpq_class> expanded(std::uint32_t length) const;

  std::uint32_t conductor_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace dlchar

#endif  // DLCHAR_CYCLOTOMIC_HPP

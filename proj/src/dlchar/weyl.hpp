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
#ifndef DLCHAR_WEYL_HPP
#define DLCHAR_WEYL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dlchar/torus.hpp"

namespace dlchar {

// N(T)/P for N(T) = {g : g A g^{-1} = A, g P g^{-1} = P} inside G(k) or G~(k).
struct WeylGroup {
  TorusPtr torus;
  bool fixed = true;
  std::vector<Mat> normalizer;       // sorted
  std::vector<Mat> representatives;  // least element of each coset gP, sorted
};

WeylGroup weyl_group(const TorusPtr& T, bool fixed);

// X = {g in G~(k) : g A_S g^{-1} = A_T, g P_S g^{-1} = P_T}, split into
// cosets T~(k) g and into orbits of N_{G(k)}(T) acting by v . T~g = T~vg.
struct Transporter {
  TorusPtr S, T, T_tilde;
  std::vector<Mat> elements;                     // sorted
  std::vector<std::uint32_t> coset_of;           // parallel to elements
  std::vector<Mat> coset_representatives;        // least element per coset
  std::vector<std::vector<std::uint32_t>> orbits;  // coset indices, ascending; orbits ordered by first coset

  bool empty() const { return elements.empty(); }
  std::optional<std::uint32_t> index_of(const Mat& g) const;
  // Elements of all cosets in orbit o, ascending.
  std::vector<Mat> orbit_elements(std::size_t o) const;
};

Transporter weyl_transporter(const TorusPtr& S, const TorusPtr& T, const TorusPtr& T_tilde, const WeylGroup& W_T);

// Direct test of the transporter condition for one element.
bool transports(const Mat& g, const RationalTorus& S, const RationalTorus& T);

}  // namespace dlchar

#endif  // DLCHAR_WEYL_HPP

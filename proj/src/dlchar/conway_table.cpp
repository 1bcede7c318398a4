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

namespace dlchar {

namespace {

struct ConwayEntry {
  unsigned p;
  unsigned m;
  std::vector<unsigned> coeffs;  // constant term first, monic
};

// Conway polynomials for p in {2, 3, 5, 7} with p^m <= 2^16.
const std::vector<ConwayEntry>& table() {
  static const std::vector<ConwayEntry> entries = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
    {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
    {3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {5, 5, {3, 4, 0, 0, 0, 1}},
    {5, 6, {2, 0, 1, 4, 1, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {7, 5, {4, 1, 0, 0, 0, 1}},
  };
  return entries;
}

}  // namespace

std::optional<ModulusPoly> conway_table_lookup(unsigned p, unsigned m) {
  for (const auto& e : table())
    if (e.p == p && e.m == m) return e.coeffs;
  return std::nullopt;
}

}  // namespace dlchar

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
#ifndef DLCHAR_DL_CHARACTERS_HPP
#define DLCHAR_DL_CHARACTERS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dlchar/cyclotomic.hpp"
#include "dlchar/torus.hpp"
#include "dlchar/weyl.hpp"

namespace dlchar {

// R_T^G theta for a torus T of G(k).
class DLCharacter {
 public:
  explicit DLCharacter(TorusCharacter theta);

  const TorusCharacter& theta() const { return theta_; }
  const TorusPtr& torus() const { return theta_.torus(); }
  const ContextPtr& context() const { return theta_.torus()->context(); }
  const WeylGroup& weyl() const { return *weyl_; }

 private:
  TorusCharacter theta_;
  std::shared_ptr<const WeylGroup> weyl_;
};

// (R_{T~}^{G~} theta~)_eps with theta~ = theta o N, extended by theta~(eps) = 1.
class TwistedDLCharacter {
 public:
  // T~ defaults to C_{G~}(T).  Throws PreconditionViolated unless T~ and
  // theta~ are eps-invariant.
  explicit TwistedDLCharacter(TorusCharacter theta, TorusPtr T_tilde = nullptr);

  const DLCharacter& base() const { return base_; }
  const TorusCharacter& theta() const { return base_.theta(); }
  const TorusCharacter& theta_tilde() const { return theta_tilde_; }
  const TorusPtr& torus() const { return base_.torus(); }
  const TorusPtr& torus_tilde() const { return theta_tilde_.torus(); }
  const ContextPtr& context() const { return base_.context(); }

 private:
  DLCharacter base_;
  TorusCharacter theta_tilde_;
};

// Values of the character at x in G(k) with x regular semisimple (regular in
// G for the transpose-inverse mode).  `check` false skips the regularity test.
CycloNumber dl_value(const DLCharacter& chi, const Mat& x, bool check = true);

// Multiset of the points g^{-1} x eps(g) (or their semidirect analogue) that
// a twisted value sums over, as counts per point index of T~, with the
// normalizing divisor.
struct TwistedProfile {
  std::vector<std::int64_t> counts;
  std::uint64_t divisor = 1;
};

TwistedProfile twisted_profile_collapsed(const TorusPtr& T_tilde, const Mat& x);
// Explicit computation in G~(k) x| <eps>: pairs h = g eps^i with
// h^{-1} (x eps) h in T~(k) eps.
TwistedProfile twisted_profile_full(const TorusPtr& T_tilde, const Mat& x);
// sum_t counts[t] theta~(t) / divisor; throws InternalError if not integral.
CycloNumber evaluate_profile(const TorusCharacter& theta_tilde, const TwistedProfile& profile);

// x in G~(k) with N(x) regular semisimple unless `check` is false.
CycloNumber twisted_dl_value_collapsed(const TwistedDLCharacter& chi, const Mat& x, bool check = true);
CycloNumber twisted_dl_value_full(const TwistedDLCharacter& chi, const Mat& x, bool check = true);

// Picks one element of a W_k(G,T)-orbit of transporter cosets.
using LiftChooser = std::function<Mat(std::size_t orbit, const std::vector<Mat>& orbit_elements)>;

// sum over W_k(G,T) \ W_k(G~,S,T) of R_T^G theta (w N(s~) w^{-1}).  Default
// lifts are the least elements of each orbit.  Every lift is re-checked
// against the transporter condition; a bad lift raises ContractViolation.
CycloNumber theorem_rhs(const DLCharacter& chi, const Mat& s_tilde, const Transporter& X,
                        const LiftChooser& chooser = nullptr, bool check = true);

}  // namespace dlchar

#endif  // DLCHAR_DL_CHARACTERS_HPP

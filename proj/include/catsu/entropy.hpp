/*
 * Copyright 2026 The catsu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "catsu/model.hpp"

/*
 * Entropy-family functionals on partitions, in bits.
 *
 *   H(X)      = -sum P(Q) log2 P(Q)
 *   H(X|Y)    = -sum P(Q and R) log2(P(Q and R) / P(R))
 *   H(X,Y)    = H(X v Y)                      (entropy of the join)
 *   MI(X|Y)   = H(X) - H(X|Y)
 *   SU(X,Y)   = 2 MI / (H(X) + H(Y))
 *   R(X,Y)    = H(X,Y) / (H(X) + H(Y))       (entropic ratio, SU = 2(1 - R))
 *
 * Terms with zero mass contribute nothing (0 log 0 = 0). Sums use
 * compensated accumulation.
 */

namespace catsu {

/// Tolerance for identities and inequalities among entropies.
inline constexpr double kEntropyTolerance = 1e-9;
/// Negative round-off above -kClampTolerance is reported as 0.
inline constexpr double kClampTolerance = 1e-12;

/// Nonnegative information quantity in bits.
class Bits {
 public:
  constexpr Bits() = default;
  explicit constexpr Bits(double v) : value_(v < 0.0 && v > -kClampTolerance ? 0.0 : v) {}

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Bits&, const Bits&) = default;

 private:
  double value_ = 0.0;
};

Bits entropy(const Partition& p);
Bits conditional_entropy(const Partition& x, const Partition& y);
Bits joint_entropy(const Partition& x, const Partition& y);

/// H(X) - H(X|Y).
Bits mutual_information(const Partition& x, const Partition& y);
/// H(X) + H(Y) - H(X,Y); the three-entropy form of the same quantity.
Bits mutual_information_via_joint(const Partition& x, const Partition& y);

/// 2 MI / (H(X) + H(Y)); 1 when both partitions are trivial.
double symmetric_uncertainty(const Partition& x, const Partition& y);
/// 2 (1 - H(X,Y) / (H(X) + H(Y))); 1 when both partitions are trivial.
double symmetric_uncertainty_via_joint(const Partition& x, const Partition& y);

/// H(X,Y) / (H(X) + H(Y)). Throws UndefinedRatioError when the denominator is 0.
double entropic_ratio(const Partition& x, const Partition& y);

struct ClauseResult {
  std::string name;
  bool holds = true;
  /// The clause's premise was false, so it held without testing anything.
  bool vacuous = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct Lemma2Report {
  std::vector<ClauseResult> clauses;
  /// x is coarser than y, so the refinement clauses were tested.
  bool refinement_active = false;

  bool all_hold() const;
  const ClauseResult& clause(const std::string& name) const;
};

/*
 * Checks the relative-entropy properties of a triple of partitions:
 *
 *   chain_rule          H(X v Y | Z) = H(X|Z) + H(Y | X v Z)
 *   monotone_left       X <= Y  implies  H(X|Z) <= H(Y|Z)
 *   monotone_right      X <= Y  implies  H(Z|X) >= H(Z|Y)
 *   coarser_iff_zero    X <= Y  iff  H(X|Y) = 0
 *   entropy_below_join  H(X) <= H(X v Y)
 *   refine_y            H(X | Y v Z) <= H(X|Y)
 *   refine_z            H(X | Y v Z) <= H(X|Z)
 *
 * All comparisons allow kEntropyTolerance. Throws StructuralError when the
 * partitions are over different rows.
 */
Lemma2Report check_lemma2(const Partition& x, const Partition& y, const Partition& z);

}  // namespace catsu

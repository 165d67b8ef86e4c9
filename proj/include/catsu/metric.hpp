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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catsu/model.hpp"
#include "catsu/report.hpp"

/*
 * The distance d = 1 - SU on categorical variables and validators for the
 * similarity-metric and distance-metric axioms.
 *
 * On the quotient by indiscernibility (equal induced partitions) d is a
 * metric with values in [0, 1]. Two constants are indiscernible, so
 * d(const, const) = 0 and d(const, X) = 1 for non-constant X.
 */

namespace catsu {

/// Square matrix of values between named variables, row-major.
struct NamedMatrix {
  std::vector<std::string> names;
  std::vector<double> values;

  std::size_t size() const noexcept { return names.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * names.size() + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * names.size() + j]; }

  friend bool operator==(const NamedMatrix&, const NamedMatrix&) = default;
};

using DistanceMatrix = NamedMatrix;

/// 1 - SU on partitions.
double su_distance(const Partition& x, const Partition& y);
/// (H(X|Y) + H(Y|X)) / (H(X) + H(Y)); 0 when both partitions are trivial.
double symmetric_distance(const Partition& x, const Partition& y);

double symmetric_uncertainty(const CategoricalVariable& x, const CategoricalVariable& y,
                             const Dataset& d);
double su_distance(const CategoricalVariable& x, const CategoricalVariable& y, const Dataset& d);

/// Distances between the named columns (all columns when `subset` is empty).
/// Each unordered pair is computed once. Throws LookupError.
DistanceMatrix distance_matrix(const Dataset& d,
                               const std::optional<std::vector<std::string>>& subset = {});
/// Same layout, SU values.
NamedMatrix similarity_matrix(const Dataset& d,
                              const std::optional<std::vector<std::string>>& subset = {});

/*
 * How validators pick tuples of columns: every ordered tuple when there are
 * at most `exhaustive_limit` columns, otherwise `samples` tuples drawn with
 * SplitMix64(seed).
 */
struct TupleSampling {
  std::size_t exhaustive_limit = 8;
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
};

/*
 * SU as a similarity metric, tolerance 1e-9:
 *   symmetry          SU(X,Y) = SU(Y,X)
 *   reflexivity       SU(X,X) >= 0
 *   self_similarity   SU(X,X) >= SU(X,Y)
 *   triangle          SU(X,Y) + SU(Y,Z) <= SU(X,Z) + SU(Y,Y)
 *   indiscernibles    SU(X,X) = SU(Y,Y) = SU(X,Y)  iff  equal canonical class
 *   normalized        0 <= SU(X,Y) <= 1
 * Counters record indiscernible pairs seen, pairs with SU = 1 but distinct
 * classes, and pairs with equal entropy but distinct classes.
 */
AxiomReport check_similarity_axioms(const Dataset& d, const TupleSampling& sampling = {});

/*
 * d as a distance metric: non_negativity, symmetry, triangle,
 * indiscernibles (d <= 1e-9 iff equal class, both directions) and
 * normalized (d <= 1). `class_keys[i]` belongs to m.names[i].
 */
AxiomReport check_distance_axioms(const DistanceMatrix& m,
                                  std::span<const CanonicalClass> class_keys,
                                  const TupleSampling& sampling = {});

/*
 * Agreement between the algebraically equivalent forms, on ordered pairs:
 *   su_forms, mi_forms, mi_symmetry, distance_forms, joint_decomposition,
 *   entropy_chain (0 <= H(X|Y) <= H(X) <= H(X,Y) <= H(X)+H(Y)),
 *   ratio_bounds (1/2 <= R <= 1 and SU = 2(1-R) when R is defined).
 */
PropertyReport check_identities(std::span<const Partition> parts,
                                const std::vector<std::string>& names,
                                const TupleSampling& sampling = {});
PropertyReport check_identities(const Dataset& d, const TupleSampling& sampling = {});

struct DemoPoint {
  std::size_t rows = 0;
  std::size_t prefix = 0;  ///< X marks the first `prefix` rows, Y the first prefix + 1
  double epsilon = 0.0;    ///< 1 / rows, the mass of the single differing row
  double distance = 0.0;
};

/*
 * Nested binary indicators on rows = 4, 8, 16, ... (steps values, prefix =
 * rows / 2). The two variables are never indiscernible, yet their distance
 * shrinks towards 0 as the differing mass does. Requires 2 <= steps <= 20,
 * otherwise ConfigError.
 */
std::vector<DemoPoint> nondiscreteness_demo(std::size_t steps);

/// positive, strictly_decreasing; below_0_05 requires some point under 0.05.
PropertyReport check_nondiscreteness(std::span<const DemoPoint> points,
                                     bool require_small = true);

}  // namespace catsu

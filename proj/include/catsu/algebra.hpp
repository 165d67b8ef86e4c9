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

#include <string>
#include <string_view>
#include <utility>

#include "catsu/metric.hpp"
#include "catsu/model.hpp"
#include "catsu/report.hpp"

/*
 * The joint operation A*B, which pairs two columns row by row, and its
 * laws on the quotient by indiscernibility: associative, commutative, with
 * any constant column as identity, and contractive for d = 1 - SU:
 *
 *   d(X*Y, Z*W) <= d(X,Z) + d(Y,W)
 */

namespace catsu {

/// Name and label of the column produced by identity_variable().
inline constexpr std::string_view kIdentityName = "Phi";
inline constexpr std::string_view kIdentityLabel = "φ";

/*
 * Pair labels are "(" a "," b ")" with backslash, parentheses and comma
 * inside each component escaped by a backslash. A joint of joints nests
 * cleanly: "((x,y),z)" has components "(x,y)" and "z" after one decode.
 */
std::string encode_pair_label(std::string_view left, std::string_view right);
/// Inverse of encode_pair_label. Throws StructuralError on malformed input.
std::pair<std::string, std::string> decode_pair_label(std::string_view label);

struct JointVariable {
  CategoricalVariable variable;
  std::string left_parent;
  std::string right_parent;
};

/// C(p) = (A(p), B(p)), named "A*B". Only realized pairs enter the alphabet.
JointVariable joint(const CategoricalVariable& a, const CategoricalVariable& b, const Dataset& d);

/// The constant column Phi on d's rows.
CategoricalVariable identity_variable(const Dataset& d);

/// Equal induced partitions. Throws StructuralError when not on d.
bool are_indiscernible(const CategoricalVariable& a, const CategoricalVariable& b,
                       const Dataset& d);

/*
 * Monoid laws by exact canonical-class comparison, over the columns plus
 * Phi:
 *   associativity         (A*B)*C ~ A*(B*C)
 *   commutativity         A*B ~ B*A
 *   identity              A*Phi ~ A and Phi*A ~ A
 *   joint_is_join         partition(A*B) = partition(A) v partition(B)
 *   well_definedness      A'*B' ~ A*B for relabeled copies A' ~ A, B' ~ B
 *   su_quotient_invariance  SU(A',B) = SU(A,B) bit for bit
 */
LawReport check_monoid_laws(const Dataset& d, const TupleSampling& sampling = {});

/// d(X*Y, Z*W) <= d(X,Z) + d(Y,W) within 1e-9, over the columns plus Phi.
LawReport check_contractivity(const Dataset& d, const TupleSampling& sampling = {});

}  // namespace catsu

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
#include <utility>
#include <vector>

#include "catsu/model.hpp"

namespace catsu::testing {

// Column whose labels are the single characters of `chars`.
inline CategoricalVariable col(std::string name, std::string_view chars) {
  std::vector<std::string> labels;
  for (char c : chars) labels.emplace_back(1, c);
  return CategoricalVariable(std::move(name), std::move(labels));
}

// Uniform dataset from (name, chars) pairs.
inline Dataset data(std::vector<std::pair<std::string, std::string>> spec) {
  std::vector<CategoricalVariable> cols;
  for (auto& [name, chars] : spec) cols.push_back(col(name, chars));
  return Dataset(std::move(cols));
}

inline Partition part(const Dataset& d, std::string_view name) {
  return induced_partition(d.column(name), d);
}

}  // namespace catsu::testing

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
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catsu {

/// The tuple that produced a check's tightest (or violating) evaluation.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<std::string> names;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

/*
 * Outcome of one property over many tuples.
 *
 * slack is positive when the property holds with room to spare and
 * negative when violated: rhs - lhs for "lhs <= rhs", -|lhs - rhs| for
 * equalities, 0 / -1 for exact boolean properties. A tuple fails when its
 * slack is below -tolerance. The witness is the tuple with the smallest
 * slack seen, so a failed check always has one.
 */
struct PropertyCheck {
  std::string name;
  double tolerance = 0.0;
  bool passed = true;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;

  void observe(std::vector<std::size_t> indices, double lhs, double rhs, double slack);
  /// Convenience forms of observe().
  void at_most(std::vector<std::size_t> indices, double lhs, double rhs) {
    observe(std::move(indices), lhs, rhs, rhs - lhs);
  }
  void equal(std::vector<std::size_t> indices, double lhs, double rhs);
  void exact(std::vector<std::size_t> indices, bool holds) {
    observe(std::move(indices), holds ? 1.0 : 0.0, 1.0, holds ? 0.0 : -1.0);
  }
};

struct PropertyReport {
  /// deque: references returned by add() stay valid as checks are added.
  std::deque<PropertyCheck> checks;
  /// Informational tallies (e.g. how often a conditional clause was active).
  std::map<std::string, std::uint64_t> counters;

  PropertyCheck& add(std::string name, double tolerance);
  bool passed() const;
  const PropertyCheck& check(std::string_view name) const;
  PropertyCheck& check(std::string_view name);

  /// Fill witness names from `names` (indices refer into it).
  void name_witnesses(const std::vector<std::string>& names);
  /// Accumulate another report with the same check names.
  void merge(const PropertyReport& other);

  /// One line per check plus counters, stable layout for CLI output.
  std::string to_text() const;
};

using AxiomReport = PropertyReport;
using LawReport = PropertyReport;

}  // namespace catsu

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
#include <string>
#include <string_view>

#include "catsu/model.hpp"

namespace catsu {

/*
 * SplitMix64. The full state transition is
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * and bounded integers use rejection sampling on the top of the range, so
 * a given seed produces the same stream in any language.
 */
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

enum class CorrelationMode {
  independent,  ///< every column drawn on its own
  refined,      ///< column 1 refines column 0
  noisy_copy,   ///< column 1 is a relabeled copy of column 0, sometimes with one row changed
  arbitrary,    ///< per-column mix of fresh, copy, refinement, coarsening, product and constant
};

std::string_view to_string(CorrelationMode m);
/// Throws ConfigError for unknown names.
CorrelationMode parse_correlation_mode(std::string_view s);

struct IntRange {
  std::size_t min = 0;
  std::size_t max = 0;
};

struct GenConfig {
  std::uint64_t seed = 0;
  IntRange rows{2, 12};
  IntRange alphabet_size{1, 4};
  CorrelationMode mode = CorrelationMode::arbitrary;
  /// Draw integer row weights in 1..3 instead of uniform rows.
  bool weighted_rows = false;
};

/*
 * Deterministic random dataset with columns named c0, c1, ...
 *
 * In refined mode column 1's partition refines column 0's, and in
 * noisy_copy mode column 1 is indiscernible from column 0 or differs in a
 * single row. Columns built from another column may use more symbols than
 * alphabet_size.max. Throws ConfigError for empty or inverted ranges or
 * zero columns, and when a mode needs two columns but gets one.
 */
Dataset gen_dataset(const GenConfig& cfg, std::size_t columns);

}  // namespace catsu

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
#include <utility>
#include <vector>

#include "catsu/metric.hpp"
#include "catsu/randgen.hpp"

namespace catsu::detail {

// Calls fn(const std::vector<std::size_t>&) for each ordered tuple of
// `arity` indices below n, exhaustively or sampled per `sampling`.
template <typename Fn>
void for_each_tuple(std::size_t n, std::size_t arity, const TupleSampling& sampling, Fn&& fn) {
  if (n == 0 || arity == 0) return;
  std::vector<std::size_t> t(arity, 0);
  if (n <= sampling.exhaustive_limit) {
    for (;;) {
      fn(std::as_const(t));
      std::size_t k = arity;
      while (k > 0 && ++t[k - 1] == n) t[--k] = 0;
      if (k == 0) return;
    }
  }
  SplitMix64 rng(sampling.seed);
  for (std::size_t s = 0; s < sampling.samples; ++s) {
    for (auto& i : t) i = rng.below(n);
    fn(std::as_const(t));
  }
}

}  // namespace catsu::detail

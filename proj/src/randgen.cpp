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

#include "catsu/randgen.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "catsu/error.hpp"

namespace catsu {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw ConfigError("empty sampling range");
  // Reject the low (2^64 mod bound) values so the modulo is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::string_view to_string(CorrelationMode m) {
  switch (m) {
    case CorrelationMode::independent: return "independent";
    case CorrelationMode::refined: return "refined";
    case CorrelationMode::noisy_copy: return "noisy-copy";
    case CorrelationMode::arbitrary: return "arbitrary";
  }
  return "?";
}

CorrelationMode parse_correlation_mode(std::string_view s) {
  for (auto m : {CorrelationMode::independent, CorrelationMode::refined,
                 CorrelationMode::noisy_copy, CorrelationMode::arbitrary}) {
    if (to_string(m) == s) return m;
  }
  throw ConfigError("unknown correlation mode '" + std::string(s) + "'");
}

namespace {

using Codes = std::vector<std::uint32_t>;

class Builder {
 public:
  Builder(SplitMix64& rng, std::size_t rows, IntRange alphabet)
      : rng_(rng), rows_(rows), alphabet_(alphabet) {}

  Codes fresh() {
    const auto k = rng_.between(alphabet_.min, alphabet_.max);
    Codes c(rows_);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng_.below(k));
    return c;
  }

  Codes constant() const { return Codes(rows_, 0); }

  // Some parent symbols split in two, keeping within the alphabet cap.
  Codes refinement(const Codes& parent) {
    const std::vector<std::uint32_t> present = symbols(parent);
    std::size_t used = present.size();
    std::uint32_t next = present.back() + 1;
    std::vector<std::uint32_t> child(next, kNone);
    for (std::uint32_t s : present) {
      if (used < alphabet_.max && rng_.chance(1, 2)) {
        child[s] = next++;
        ++used;
      }
    }
    Codes c = parent;
    for (auto& v : c) {
      if (child[v] != kNone && rng_.chance(1, 2)) v = child[v];
    }
    return c;
  }

  // Parent symbols merged into at most two buckets.
  Codes coarsening(const Codes& parent) {
    std::vector<std::uint32_t> bucket(max_code(parent) + 1);
    for (auto& b : bucket) b = static_cast<std::uint32_t>(rng_.below(2));
    Codes c(rows_);
    for (std::size_t r = 0; r < rows_; ++r) c[r] = bucket[parent[r]];
    return c;
  }

  // Same partition, permuted symbol numbering.
  Codes relabeled(const Codes& parent) {
    std::vector<std::uint32_t> perm(max_code(parent) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm);
    Codes c(rows_);
    for (std::size_t r = 0; r < rows_; ++r) c[r] = perm[parent[r]];
    return c;
  }

  // Relabeled copy; half the time one row moves to another (possibly new) symbol.
  Codes noisy_copy(const Codes& parent) {
    Codes c = relabeled(parent);
    if (rng_.chance(1, 2)) {
      std::vector<std::uint32_t> options = symbols(c);
      if (options.size() < alphabet_.max) options.push_back(options.back() + 1);
      c[rng_.below(rows_)] = options[rng_.below(options.size())];
    }
    return c;
  }

  // Two exactly independent columns when rows = a * b with a, b > 1.
  bool product_pair(Codes& first, Codes& second) {
    std::vector<std::size_t> divisors;
    for (std::size_t a = 2; a < rows_; ++a) {
      if (rows_ % a == 0 && a <= alphabet_.max && rows_ / a <= alphabet_.max) divisors.push_back(a);
    }
    if (divisors.empty()) return false;
    const std::size_t b = divisors[rng_.below(divisors.size())];
    first.assign(rows_, 0);
    second.assign(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      first[r] = static_cast<std::uint32_t>(r / b);
      second[r] = static_cast<std::uint32_t>(r % b);
    }
    return true;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[rng_.below(i)]);
    }
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  // Distinct codes, ascending.
  static std::vector<std::uint32_t> symbols(const Codes& c) {
    std::vector<std::uint32_t> s(c.begin(), c.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  static std::uint32_t max_code(const Codes& c) {
    std::uint32_t m = 0;
    for (auto v : c) m = std::max(m, v);
    return m;
  }

  SplitMix64& rng_;
  std::size_t rows_;
  IntRange alphabet_;
};

void validate(const GenConfig& cfg, std::size_t columns) {
  if (columns == 0) throw ConfigError("at least one column is required");
  if (cfg.rows.min == 0 || cfg.rows.min > cfg.rows.max) {
    throw ConfigError("row range must satisfy 1 <= min <= max");
  }
  if (cfg.alphabet_size.min == 0 || cfg.alphabet_size.min > cfg.alphabet_size.max) {
    throw ConfigError("alphabet range must satisfy 1 <= min <= max");
  }
  if ((cfg.mode == CorrelationMode::refined || cfg.mode == CorrelationMode::noisy_copy) &&
      columns < 2) {
    throw ConfigError(std::string(to_string(cfg.mode)) + " mode needs at least two columns");
  }
}

}  // namespace

Dataset gen_dataset(const GenConfig& cfg, std::size_t columns) {
  validate(cfg, columns);
  SplitMix64 rng(cfg.seed);
  const std::size_t rows = rng.between(cfg.rows.min, cfg.rows.max);
  Builder b(rng, rows, cfg.alphabet_size);

  std::vector<Codes> cols;
  cols.reserve(columns);
  // A one-symbol alphabet admits only constants, whatever the mode.
  if (cfg.alphabet_size.max == 1) {
    cols.assign(columns, b.constant());
  } else if (cfg.mode == CorrelationMode::refined) {
    cols.push_back(b.fresh());
    cols.push_back(b.refinement(cols[0]));
  } else if (cfg.mode == CorrelationMode::noisy_copy) {
    cols.push_back(b.fresh());
    cols.push_back(b.noisy_copy(cols[0]));
  } else if (cfg.mode == CorrelationMode::arbitrary && columns >= 2 && rng.chance(1, 4)) {
    Codes first;
    Codes second;
    if (b.product_pair(first, second)) {
      cols.push_back(std::move(first));
      cols.push_back(std::move(second));
    }
  }

  while (cols.size() < columns) {
    if (cfg.mode != CorrelationMode::arbitrary || cols.empty()) {
      cols.push_back(b.fresh());
      continue;
    }
    const Codes parent = cols[rng.below(cols.size())];
    switch (rng.below(6)) {
      case 0: cols.push_back(b.fresh()); break;
      case 1: cols.push_back(b.relabeled(parent)); break;
      case 2: cols.push_back(b.noisy_copy(parent)); break;
      case 3: cols.push_back(b.refinement(parent)); break;
      case 4: cols.push_back(b.coarsening(parent)); break;
      default: cols.push_back(b.constant()); break;
    }
  }

  // One row permutation for all columns keeps every relation between them.
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  b.shuffle(order);

  std::vector<CategoricalVariable> vars;
  vars.reserve(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    std::vector<std::string> labels;
    labels.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) labels.push_back("s" + std::to_string(cols[c][order[r]]));
    vars.emplace_back("c" + std::to_string(c), std::move(labels));
  }

  if (!cfg.weighted_rows) return Dataset(std::move(vars));
  std::vector<std::int64_t> raw(rows);
  std::int64_t total = 0;
  for (auto& w : raw) total += (w = static_cast<std::int64_t>(rng.between(1, 3)));
  std::vector<Rational> weights;
  weights.reserve(rows);
  for (auto w : raw) weights.emplace_back(w, total);
  return Dataset(std::move(vars), weights);
}

}  // namespace catsu

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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catsu/rational.hpp"

/*
 * Core data types.
 *
 * A Dataset is a finite sample space of weighted rows together with named
 * categorical columns. Each column induces a Partition of the rows (one
 * block per category). All probabilities in this layer are exact rationals;
 * floating point only appears once logarithms are taken in entropy.hpp.
 *
 * Every type here is immutable after construction.
 */

namespace catsu {

/// Label substituted for empty CSV cells under the keep-as-category policy.
inline constexpr std::string_view kMissingLabel = "<NA>";

/*
 * Probability mass of each row, stored as integer numerators over a single
 * common denominator so that any block mass is an exact int64 sum.
 */
class RowWeights {
 public:
  /// Uniform 1/rows.
  explicit RowWeights(std::size_t rows);
  /// Arbitrary positive rationals that must sum to exactly 1.
  explicit RowWeights(std::span<const Rational> weights);

  std::size_t size() const noexcept { return numerators_.size(); }
  bool uniform() const noexcept { return uniform_; }
  std::int64_t numerator(std::size_t row) const { return numerators_[row]; }
  std::int64_t denominator() const noexcept { return denominator_; }
  Rational weight(std::size_t row) const { return {numerators_[row], denominator_}; }

  friend bool operator==(const RowWeights&, const RowWeights&) = default;

 private:
  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_ = 1;
  bool uniform_ = true;
};

using RowUniverse = std::shared_ptr<const RowWeights>;

/// True when both handles describe the same weighted row set.
bool same_universe(const RowUniverse& a, const RowUniverse& b);

/*
 * A column: one label per row plus its alphabet, the distinct labels in
 * first-occurrence order. Labels are NFC-normalized on construction and
 * compared as exact byte strings afterwards.
 */
class CategoricalVariable {
 public:
  CategoricalVariable(std::string name, std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::string& label(std::size_t row) const { return alphabet_[codes_[row]]; }
  /// Index into alphabet() for each row.
  std::span<const std::uint32_t> codes() const noexcept { return codes_; }
  std::span<const std::string> alphabet() const noexcept { return alphabet_; }
  std::vector<std::string> labels() const;

  bool is_constant() const noexcept { return alphabet_.size() <= 1; }

  /// Same rows under a new name.
  CategoricalVariable renamed(std::string name) const;
  /// Apply `relabel` to every alphabet symbol. Must be injective on the alphabet.
  CategoricalVariable relabeled(const std::function<std::string(const std::string&)>& relabel) const;

  friend bool operator==(const CategoricalVariable&, const CategoricalVariable&) = default;

 private:
  CategoricalVariable() = default;

  std::string name_;
  std::vector<std::string> alphabet_;
  std::vector<std::uint32_t> codes_;
};

/*
 * Rows plus columns. Column order is the insertion (file) order and names
 * are unique.
 */
class Dataset {
 public:
  /// Uniform row weights. Requires at least one column.
  explicit Dataset(std::vector<CategoricalVariable> columns);
  /// Explicit weights; `weights.size()` fixes the row count.
  Dataset(std::vector<CategoricalVariable> columns, std::span<const Rational> weights);
  /// A dataset with `rows` uniform rows and no columns yet.
  static Dataset empty(std::size_t rows);

  std::size_t row_count() const noexcept { return universe_->size(); }
  const RowUniverse& universe() const noexcept { return universe_; }
  Rational row_weight(std::size_t row) const { return universe_->weight(row); }

  std::span<const CategoricalVariable> columns() const noexcept { return columns_; }
  std::size_t column_count() const noexcept { return columns_.size(); }
  std::vector<std::string> column_names() const;
  bool has_column(std::string_view name) const;
  /// Throws LookupError for unknown names.
  const CategoricalVariable& column(std::string_view name) const;
  std::size_t column_index(std::string_view name) const;

  /// Copy with `v` appended. Throws NameCollisionError or StructuralError.
  Dataset with_column(CategoricalVariable v) const;

  /// Same weighted rows and the same columns in the same order.
  friend bool operator==(const Dataset& a, const Dataset& b) {
    return same_universe(a.universe_, b.universe_) && a.columns_ == b.columns_;
  }

 private:
  Dataset(RowUniverse universe, std::vector<CategoricalVariable> columns);

  RowUniverse universe_;
  std::vector<CategoricalVariable> columns_;
};

/*
 * A partition of the rows into nonempty disjoint blocks.
 *
 * Block ids are assigned in order of each block's smallest row, so two
 * partitions with the same blocks (as sets of rows) have identical
 * block_of() arrays and compare equal with operator==.
 */
class Partition {
 public:
  /// `block_of[r]` is any id for row r's block; ids are renumbered.
  Partition(RowUniverse universe, std::span<const std::uint32_t> block_of);

  /// The single-block partition of all rows.
  static Partition trivial(RowUniverse universe);

  const RowUniverse& universe() const noexcept { return universe_; }
  std::size_t row_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_mass_.size(); }
  std::uint32_t block_of(std::size_t row) const { return block_of_[row]; }
  std::span<const std::uint32_t> block_ids() const noexcept { return block_of_; }

  /// Rows of each block, ascending, blocks ordered by smallest row.
  std::vector<std::vector<std::size_t>> blocks() const;
  /// Block mass as a numerator over universe()->denominator().
  std::int64_t block_mass(std::size_t block) const { return block_mass_[block]; }
  Rational block_probability(std::size_t block) const;
  std::vector<Rational> block_probabilities() const;

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  RowUniverse universe_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::int64_t> block_mass_;
};

/*
 * Joint masses of two variables. Cell (i, j) holds the total weight of
 * rows with X = row_alphabet[i] and Y = col_alphabet[j].
 */
class ContingencyTable {
 public:
  ContingencyTable(std::vector<std::string> row_alphabet, std::vector<std::string> col_alphabet,
                   std::vector<Rational> cells);

  std::span<const std::string> row_alphabet() const noexcept { return row_alphabet_; }
  std::span<const std::string> col_alphabet() const noexcept { return col_alphabet_; }
  std::size_t rows() const noexcept { return row_alphabet_.size(); }
  std::size_t cols() const noexcept { return col_alphabet_.size(); }

  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
  /// Lookup by label; throws LookupError.
  const Rational& cell(std::string_view x, std::string_view y) const;

  std::span<const Rational> row_marginals() const noexcept { return row_marginals_; }
  std::span<const Rational> col_marginals() const noexcept { return col_marginals_; }
  Rational total() const;

 private:
  std::vector<std::string> row_alphabet_;
  std::vector<std::string> col_alphabet_;
  std::vector<Rational> cells_;
  std::vector<Rational> row_marginals_;
  std::vector<Rational> col_marginals_;
};

/*
 * Canonical representative of an indiscernibility class: the induced
 * partition with blocks sorted by descending probability, ties broken by
 * smallest row. Two variables get equal CanonicalClass values exactly when
 * they induce the same partition of the rows.
 *
 * signature() is the sorted probability vector (the histogram up to
 * relabeling). Equal signatures are necessary but not sufficient for
 * equal classes.
 */
class CanonicalClass {
 public:
  explicit CanonicalClass(const Partition& p);

  std::span<const std::vector<std::size_t>> blocks() const noexcept { return blocks_; }
  std::span<const Rational> signature() const noexcept { return signature_; }

  /// Deterministic text form, e.g. "0,2,3|1|4;2/5,2/5,1/5".
  std::string serialize() const;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
  friend bool operator<(const CanonicalClass& a, const CanonicalClass& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<Rational> signature_;
};

/// Partition of d's rows by v's labels. Throws StructuralError on length mismatch.
Partition induced_partition(const CategoricalVariable& v, const Dataset& d);

/// Common refinement: all nonempty pairwise block intersections.
Partition join(const Partition& p, const Partition& q);

/// True iff every block of q lies inside a block of p (p ≤ q).
bool is_coarser(const Partition& p, const Partition& q);

ContingencyTable contingency(const CategoricalVariable& x, const CategoricalVariable& y,
                             const Dataset& d);

CanonicalClass canonicalize(const CategoricalVariable& v, const Dataset& d);
CanonicalClass canonicalize(const Partition& p);

/// The weaker histogram-only comparison.
bool same_signature(const CanonicalClass& a, const CanonicalClass& b);

}  // namespace catsu

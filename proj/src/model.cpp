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

#include "catsu/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "catsu/error.hpp"
#include "unicode.hpp"

namespace catsu {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const wide_int l = static_cast<wide_int>(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("row weight denominators overflow 64 bits");
  }
  return static_cast<std::int64_t>(l);
}

void require_same_universe(const Partition& p, const Partition& q) {
  if (!same_universe(p.universe(), q.universe())) {
    throw StructuralError("partitions are over different row sets");
  }
}

void require_member(const CategoricalVariable& v, const Dataset& d) {
  if (v.size() != d.row_count()) {
    throw StructuralError("column '" + v.name() + "' has " + std::to_string(v.size()) +
                          " entries but the dataset has " + std::to_string(d.row_count()) +
                          " rows");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// RowWeights

RowWeights::RowWeights(std::size_t rows) {
  if (rows == 0) throw StructuralError("a dataset needs at least one row");
  numerators_.assign(rows, 1);
  denominator_ = static_cast<std::int64_t>(rows);
}

RowWeights::RowWeights(std::span<const Rational> weights) {
  if (weights.empty()) throw StructuralError("a dataset needs at least one row");
  std::int64_t common = 1;
  for (const Rational& w : weights) {
    if (w.num() <= 0) throw StructuralError("row weights must be positive");
    common = checked_lcm(common, w.den());
  }
  numerators_.reserve(weights.size());
  wide_int total = 0;
  for (const Rational& w : weights) {
    numerators_.push_back(w.num() * (common / w.den()));
    total += numerators_.back();
  }
  if (total != common) throw StructuralError("row weights must sum to exactly 1");
  denominator_ = common;
  uniform_ = std::adjacent_find(numerators_.begin(), numerators_.end(),
                                std::not_equal_to<>()) == numerators_.end();
}

bool same_universe(const RowUniverse& a, const RowUniverse& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

// ---------------------------------------------------------------------------
// CategoricalVariable

CategoricalVariable::CategoricalVariable(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)) {
  std::unordered_map<std::string, std::uint32_t> index;
  codes_.reserve(labels.size());
  for (std::string& raw : labels) {
    std::string label = detail::to_nfc(std::move(raw));
    auto [it, inserted] = index.try_emplace(label, static_cast<std::uint32_t>(alphabet_.size()));
    if (inserted) alphabet_.push_back(std::move(label));
    codes_.push_back(it->second);
  }
}

std::vector<std::string> CategoricalVariable::labels() const {
  std::vector<std::string> out;
  out.reserve(codes_.size());
  for (std::uint32_t c : codes_) out.push_back(alphabet_[c]);
  return out;
}

CategoricalVariable CategoricalVariable::renamed(std::string name) const {
  CategoricalVariable v = *this;
  v.name_ = std::move(name);
  return v;
}

CategoricalVariable CategoricalVariable::relabeled(
    const std::function<std::string(const std::string&)>& relabel) const {
  CategoricalVariable v;
  v.name_ = name_;
  v.codes_ = codes_;
  std::unordered_set<std::string> seen;
  for (const std::string& a : alphabet_) {
    std::string b = detail::to_nfc(relabel(a));
    if (!seen.insert(b).second) {
      throw StructuralError("relabeling of column '" + name_ + "' is not injective");
    }
    v.alphabet_.push_back(std::move(b));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Dataset

Dataset::Dataset(RowUniverse universe, std::vector<CategoricalVariable> columns)
    : universe_(std::move(universe)), columns_(std::move(columns)) {
  std::unordered_set<std::string_view> names;
  for (const CategoricalVariable& c : columns_) {
    if (c.size() != universe_->size()) {
      throw StructuralError("column '" + c.name() + "' has " + std::to_string(c.size()) +
                            " entries, expected " + std::to_string(universe_->size()));
    }
    if (!names.insert(c.name()).second) {
      throw NameCollisionError("duplicate column name '" + c.name() + "'");
    }
  }
}

namespace {

std::size_t inferred_rows(const std::vector<CategoricalVariable>& columns) {
  if (columns.empty()) throw StructuralError("cannot infer the row count without columns");
  return columns.front().size();
}

}  // namespace

Dataset::Dataset(std::vector<CategoricalVariable> columns)
    : universe_(std::make_shared<const RowWeights>(inferred_rows(columns))) {
  *this = Dataset(universe_, std::move(columns));
}

Dataset::Dataset(std::vector<CategoricalVariable> columns, std::span<const Rational> weights)
    : Dataset(std::make_shared<const RowWeights>(weights), std::move(columns)) {}

Dataset Dataset::empty(std::size_t rows) {
  return Dataset(std::make_shared<const RowWeights>(rows), {});
}

std::vector<std::string> Dataset::column_names() const {
  std::vector<std::string> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.name());
  return out;
}

bool Dataset::has_column(std::string_view name) const {
  return std::any_of(columns_.begin(), columns_.end(),
                     [&](const CategoricalVariable& c) { return c.name() == name; });
}

std::size_t Dataset::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name() == name) return i;
  }
  throw LookupError("unknown column '" + std::string(name) + "'");
}

const CategoricalVariable& Dataset::column(std::string_view name) const {
  return columns_[column_index(name)];
}

Dataset Dataset::with_column(CategoricalVariable v) const {
  std::vector<CategoricalVariable> cols = columns_;
  cols.push_back(std::move(v));
  return Dataset(universe_, std::move(cols));
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(RowUniverse universe, std::span<const std::uint32_t> block_of)
    : universe_(std::move(universe)) {
  if (!universe_) throw StructuralError("partition without a row universe");
  if (block_of.size() != universe_->size()) {
    throw StructuralError("partition labels " + std::to_string(block_of.size()) +
                          " rows, universe has " + std::to_string(universe_->size()));
  }
  block_of_.reserve(block_of.size());
  const std::uint32_t max_id =
      block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end());

  auto assign = [&](auto& remap, auto lookup) {
    for (std::size_t r = 0; r < block_of.size(); ++r) {
      std::uint32_t& slot = lookup(remap, block_of[r]);
      if (slot == kUnassigned) {
        slot = static_cast<std::uint32_t>(block_mass_.size());
        block_mass_.push_back(0);
      }
      block_of_.push_back(slot);
      block_mass_[slot] += universe_->numerator(r);
    }
  };

  if (max_id <= 4 * block_of.size() + 64) {
    std::vector<std::uint32_t> remap(static_cast<std::size_t>(max_id) + 1, kUnassigned);
    assign(remap, [](auto& m, std::uint32_t id) -> std::uint32_t& { return m[id]; });
  } else {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    assign(remap, [](auto& m, std::uint32_t id) -> std::uint32_t& {
      return m.try_emplace(id, kUnassigned).first->second;
    });
  }
}

Partition Partition::trivial(RowUniverse universe) {
  if (!universe) throw StructuralError("partition without a row universe");
  std::vector<std::uint32_t> ids(universe->size(), 0);
  return Partition(std::move(universe), ids);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count());
  for (std::size_t r = 0; r < block_of_.size(); ++r) out[block_of_[r]].push_back(r);
  return out;
}

Rational Partition::block_probability(std::size_t block) const {
  return {block_mass_[block], universe_->denominator()};
}

std::vector<Rational> Partition::block_probabilities() const {
  std::vector<Rational> out;
  out.reserve(block_count());
  for (std::size_t b = 0; b < block_count(); ++b) out.push_back(block_probability(b));
  return out;
}

bool operator==(const Partition& a, const Partition& b) {
  return same_universe(a.universe_, b.universe_) && a.block_of_ == b.block_of_;
}

// ---------------------------------------------------------------------------
// ContingencyTable

ContingencyTable::ContingencyTable(std::vector<std::string> row_alphabet,
                                   std::vector<std::string> col_alphabet,
                                   std::vector<Rational> cells)
    : row_alphabet_(std::move(row_alphabet)),
      col_alphabet_(std::move(col_alphabet)),
      cells_(std::move(cells)),
      row_marginals_(row_alphabet_.size()),
      col_marginals_(col_alphabet_.size()) {
  if (cells_.size() != row_alphabet_.size() * col_alphabet_.size()) {
    throw StructuralError("contingency cell count does not match the alphabets");
  }
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      row_marginals_[i] += at(i, j);
      col_marginals_[j] += at(i, j);
    }
  }
}

const Rational& ContingencyTable::cell(std::string_view x, std::string_view y) const {
  auto i = std::find(row_alphabet_.begin(), row_alphabet_.end(), x);
  auto j = std::find(col_alphabet_.begin(), col_alphabet_.end(), y);
  if (i == row_alphabet_.end() || j == col_alphabet_.end()) {
    throw LookupError("no contingency cell (" + std::string(x) + ", " + std::string(y) + ")");
  }
  return at(static_cast<std::size_t>(i - row_alphabet_.begin()),
            static_cast<std::size_t>(j - col_alphabet_.begin()));
}

Rational ContingencyTable::total() const {
  Rational t;
  for (const Rational& m : row_marginals_) t += m;
  return t;
}

// ---------------------------------------------------------------------------
// CanonicalClass

CanonicalClass::CanonicalClass(const Partition& p) {
  std::vector<std::size_t> order(p.block_count());
  std::iota(order.begin(), order.end(), 0);
  // Ids already follow smallest row, so a stable sort on mass is enough.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.block_mass(a) > p.block_mass(b);
  });
  auto raw = p.blocks();
  blocks_.reserve(order.size());
  signature_.reserve(order.size());
  for (std::size_t b : order) {
    blocks_.push_back(std::move(raw[b]));
    signature_.push_back(p.block_probability(b));
  }
}

std::string CanonicalClass::serialize() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  out += ';';
  for (std::size_t b = 0; b < signature_.size(); ++b) {
    if (b) out += ',';
    out += signature_[b].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

Partition induced_partition(const CategoricalVariable& v, const Dataset& d) {
  require_member(v, d);
  return Partition(d.universe(), v.codes());
}

Partition join(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  const std::size_t width = q.block_count();
  const std::size_t cells = p.block_count() * width;
  std::vector<std::uint32_t> ids(p.row_count());
  std::uint32_t next = 0;
  if (cells <= (std::size_t{1} << 22)) {
    std::vector<std::uint32_t> seen(cells, kUnassigned);
    for (std::size_t r = 0; r < ids.size(); ++r) {
      std::uint32_t& slot = seen[p.block_of(r) * width + q.block_of(r)];
      if (slot == kUnassigned) slot = next++;
      ids[r] = slot;
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    for (std::size_t r = 0; r < ids.size(); ++r) {
      const std::uint64_t key = std::uint64_t{p.block_of(r)} * width + q.block_of(r);
      ids[r] = seen.try_emplace(key, next).first->second;
      if (ids[r] == next) ++next;
    }
  }
  return Partition(p.universe(), ids);
}

bool is_coarser(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  std::vector<std::uint32_t> owner(q.block_count(), kUnassigned);
  for (std::size_t r = 0; r < q.row_count(); ++r) {
    std::uint32_t& o = owner[q.block_of(r)];
    if (o == kUnassigned) {
      o = p.block_of(r);
    } else if (o != p.block_of(r)) {
      return false;
    }
  }
  return true;
}

ContingencyTable contingency(const CategoricalVariable& x, const CategoricalVariable& y,
                             const Dataset& d) {
  require_member(x, d);
  require_member(y, d);
  const std::size_t width = y.alphabet().size();
  std::vector<std::int64_t> mass(x.alphabet().size() * width, 0);
  const RowWeights& w = *d.universe();
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    mass[x.codes()[r] * width + y.codes()[r]] += w.numerator(r);
  }
  std::vector<Rational> cells;
  cells.reserve(mass.size());
  for (std::int64_t m : mass) cells.emplace_back(m, w.denominator());
  return ContingencyTable({x.alphabet().begin(), x.alphabet().end()},
                          {y.alphabet().begin(), y.alphabet().end()}, std::move(cells));
}

CanonicalClass canonicalize(const CategoricalVariable& v, const Dataset& d) {
  return CanonicalClass(induced_partition(v, d));
}

CanonicalClass canonicalize(const Partition& p) { return CanonicalClass(p); }

bool same_signature(const CanonicalClass& a, const CanonicalClass& b) {
  return std::equal(a.signature().begin(), a.signature().end(), b.signature().begin(),
                    b.signature().end());
}

}  // namespace catsu

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

#include "catsu/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "catsu/error.hpp"

namespace catsu {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Masses of the nonempty cells of x v y, each paired with its y block.
struct CellMass {
  std::int64_t mass;
  std::uint32_t y_block;
};

std::vector<CellMass> intersection_masses(const Partition& x, const Partition& y) {
  if (!same_universe(x.universe(), y.universe())) {
    throw StructuralError("partitions are over different row sets");
  }
  const RowWeights& w = *x.universe();
  const std::size_t width = y.block_count();
  std::vector<CellMass> cells;
  if (x.block_count() * width <= (std::size_t{1} << 22)) {
    std::vector<std::int64_t> grid(x.block_count() * width, 0);
    for (std::size_t r = 0; r < x.row_count(); ++r) {
      grid[x.block_of(r) * width + y.block_of(r)] += w.numerator(r);
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (grid[k] != 0) cells.push_back({grid[k], static_cast<std::uint32_t>(k % width)});
    }
  } else {
    std::unordered_map<std::uint64_t, std::int64_t> grid;
    for (std::size_t r = 0; r < x.row_count(); ++r) {
      grid[std::uint64_t{x.block_of(r)} * width + y.block_of(r)] += w.numerator(r);
    }
    for (const auto& [k, m] : grid) {
      cells.push_back({m, static_cast<std::uint32_t>(k % width)});
    }
    // Fixed summation order independent of hash iteration.
    std::sort(cells.begin(), cells.end(), [](const CellMass& a, const CellMass& b) {
      return a.y_block != b.y_block ? a.y_block < b.y_block : a.mass < b.mass;
    });
  }
  return cells;
}

double su_from_mi(double mi, double hx, double hy) {
  const double denom = hx + hy;
  if (denom == 0.0) return 1.0;
  return 2.0 * mi / denom;
}

}  // namespace

Bits entropy(const Partition& p) {
  const double total = static_cast<double>(p.universe()->denominator());
  CompensatedSum acc;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const double prob = static_cast<double>(p.block_mass(b)) / total;
    if (prob > 0.0) acc.add(-prob * std::log2(prob));
  }
  return Bits(acc.value());
}

Bits conditional_entropy(const Partition& x, const Partition& y) {
  const double total = static_cast<double>(x.universe()->denominator());
  CompensatedSum acc;
  for (const CellMass& c : intersection_masses(x, y)) {
    const double joint = static_cast<double>(c.mass) / total;
    const double ratio =
        static_cast<double>(c.mass) / static_cast<double>(y.block_mass(c.y_block));
    acc.add(-joint * std::log2(ratio));
  }
  return Bits(acc.value());
}

Bits joint_entropy(const Partition& x, const Partition& y) { return entropy(join(x, y)); }

Bits mutual_information(const Partition& x, const Partition& y) {
  return Bits(entropy(x).value() - conditional_entropy(x, y).value());
}

Bits mutual_information_via_joint(const Partition& x, const Partition& y) {
  return Bits(entropy(x).value() + entropy(y).value() - joint_entropy(x, y).value());
}

double symmetric_uncertainty(const Partition& x, const Partition& y) {
  return su_from_mi(mutual_information(x, y).value(), entropy(x).value(), entropy(y).value());
}

double symmetric_uncertainty_via_joint(const Partition& x, const Partition& y) {
  const double hx = entropy(x).value();
  const double hy = entropy(y).value();
  if (hx + hy == 0.0) return 1.0;
  return 2.0 * (1.0 - joint_entropy(x, y).value() / (hx + hy));
}

double entropic_ratio(const Partition& x, const Partition& y) {
  const double denom = entropy(x).value() + entropy(y).value();
  if (denom == 0.0) {
    throw UndefinedRatioError("entropic ratio is undefined for two constant variables");
  }
  return joint_entropy(x, y).value() / denom;
}

// ---------------------------------------------------------------------------

bool Lemma2Report::all_hold() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.holds; });
}

const ClauseResult& Lemma2Report::clause(const std::string& name) const {
  for (const ClauseResult& c : clauses) {
    if (c.name == name) return c;
  }
  throw LookupError("no clause named '" + name + "'");
}

Lemma2Report check_lemma2(const Partition& x, const Partition& y, const Partition& z) {
  if (!same_universe(x.universe(), y.universe()) || !same_universe(x.universe(), z.universe())) {
    throw StructuralError("partitions are over different row sets");
  }
  constexpr double tol = kEntropyTolerance;
  Lemma2Report report;
  auto equal = [&](std::string name, double lhs, double rhs) {
    report.clauses.push_back({std::move(name), std::abs(lhs - rhs) <= tol, false, lhs, rhs});
  };
  auto at_most = [&](std::string name, double lhs, double rhs, bool premise = true) {
    report.clauses.push_back({std::move(name), !premise || lhs <= rhs + tol, !premise, lhs, rhs});
  };

  const Partition xy = join(x, y);
  const Partition xz = join(x, z);
  const Partition yz = join(y, z);

  equal("chain_rule", conditional_entropy(xy, z).value(),
        conditional_entropy(x, z).value() + conditional_entropy(y, xz).value());

  const bool x_coarser = is_coarser(x, y);
  report.refinement_active = x_coarser;
  at_most("monotone_left", conditional_entropy(x, z).value(), conditional_entropy(y, z).value(),
          x_coarser);
  // H(Z|X) >= H(Z|Y), written as H(Z|Y) <= H(Z|X).
  at_most("monotone_right", conditional_entropy(z, y).value(), conditional_entropy(z, x).value(),
          x_coarser);

  const double h_x_given_y = conditional_entropy(x, y).value();
  const bool zero = h_x_given_y <= tol;
  report.clauses.push_back({"coarser_iff_zero", x_coarser == zero, false,
                            x_coarser ? 1.0 : 0.0, h_x_given_y});

  at_most("entropy_below_join", entropy(x).value(), entropy(xy).value());
  const double h_x_given_yz = conditional_entropy(x, yz).value();
  at_most("refine_y", h_x_given_yz, h_x_given_y);
  at_most("refine_z", h_x_given_yz, conditional_entropy(x, z).value());
  return report;
}

}  // namespace catsu

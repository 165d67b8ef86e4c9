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

#include "catsu/metric.hpp"

#include <algorithm>
#include <cmath>

#include "catsu/entropy.hpp"
#include "catsu/error.hpp"
#include "tuples.hpp"

namespace catsu {

namespace {

constexpr double kTol = kEntropyTolerance;

std::vector<std::size_t> resolve_columns(const Dataset& d,
                                         const std::optional<std::vector<std::string>>& subset) {
  std::vector<std::size_t> idx;
  if (!subset || subset->empty()) {
    idx.resize(d.column_count());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  } else {
    for (const std::string& name : *subset) idx.push_back(d.column_index(name));
  }
  return idx;
}

std::vector<Partition> partitions_of(const Dataset& d) {
  std::vector<Partition> parts;
  parts.reserve(d.column_count());
  for (const CategoricalVariable& c : d.columns()) parts.push_back(induced_partition(c, d));
  return parts;
}

// Square matrix of f over the selected columns, f evaluated once per
// unordered pair and mirrored.
template <typename F>
NamedMatrix pairwise(const Dataset& d, const std::optional<std::vector<std::string>>& subset,
                     F f) {
  const std::vector<std::size_t> idx = resolve_columns(d, subset);
  NamedMatrix m;
  for (std::size_t i : idx) m.names.push_back(d.columns()[i].name());
  const std::size_t n = idx.size();
  m.values.assign(n * n, 0.0);
  std::vector<Partition> parts;
  parts.reserve(n);
  for (std::size_t i : idx) parts.push_back(induced_partition(d.columns()[i], d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.at(i, j) = m.at(j, i) = f(parts[i], parts[j]);
    }
  }
  return m;
}

}  // namespace

double su_distance(const Partition& x, const Partition& y) {
  return 1.0 - symmetric_uncertainty(x, y);
}

double symmetric_distance(const Partition& x, const Partition& y) {
  const double denom = entropy(x).value() + entropy(y).value();
  if (denom == 0.0) return 0.0;
  return (conditional_entropy(x, y).value() + conditional_entropy(y, x).value()) / denom;
}

double symmetric_uncertainty(const CategoricalVariable& x, const CategoricalVariable& y,
                             const Dataset& d) {
  return symmetric_uncertainty(induced_partition(x, d), induced_partition(y, d));
}

double su_distance(const CategoricalVariable& x, const CategoricalVariable& y, const Dataset& d) {
  return su_distance(induced_partition(x, d), induced_partition(y, d));
}

DistanceMatrix distance_matrix(const Dataset& d,
                               const std::optional<std::vector<std::string>>& subset) {
  return pairwise(d, subset, [](const Partition& a, const Partition& b) {
    return su_distance(a, b);
  });
}

NamedMatrix similarity_matrix(const Dataset& d,
                              const std::optional<std::vector<std::string>>& subset) {
  return pairwise(d, subset, [](const Partition& a, const Partition& b) {
    return symmetric_uncertainty(a, b);
  });
}

// ---------------------------------------------------------------------------

AxiomReport check_similarity_axioms(const Dataset& d, const TupleSampling& sampling) {
  const std::vector<Partition> parts = partitions_of(d);
  const std::size_t n = parts.size();
  std::vector<CanonicalClass> classes;
  std::vector<double> h;
  for (const Partition& p : parts) {
    classes.push_back(canonicalize(p));
    h.push_back(entropy(p).value());
  }
  // Both orders computed separately so symmetry is actually tested.
  std::vector<double> su(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) su[i * n + j] = symmetric_uncertainty(parts[i], parts[j]);
  }
  auto s = [&](std::size_t i, std::size_t j) { return su[i * n + j]; };

  AxiomReport r;
  PropertyCheck& symmetry = r.add("symmetry", kTol);
  PropertyCheck& reflexivity = r.add("reflexivity", kTol);
  PropertyCheck& self_similarity = r.add("self_similarity", kTol);
  PropertyCheck& triangle = r.add("triangle", kTol);
  PropertyCheck& indiscernibles = r.add("indiscernibles", 0.0);
  PropertyCheck& normalized = r.add("normalized", kTol);
  r.counters["indiscernible_pairs"] = 0;
  r.counters["su_one_distinct_classes"] = 0;
  r.counters["equal_entropy_distinct_classes"] = 0;

  for (std::size_t i = 0; i < n; ++i) reflexivity.at_most({i}, 0.0, s(i, i));

  detail::for_each_tuple(n, 2, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t i = t[0];
    const std::size_t j = t[1];
    symmetry.equal({i, j}, s(i, j), s(j, i));
    self_similarity.at_most({i, j}, s(i, j), s(i, i));
    normalized.observe({i, j}, s(i, j), 1.0, std::min(s(i, j), 1.0 - s(i, j)));

    const bool all_equal = std::abs(s(i, i) - s(j, j)) <= kTol &&
                           std::abs(s(i, i) - s(i, j)) <= kTol;
    const bool same_class = classes[i] == classes[j];
    indiscernibles.exact({i, j}, all_equal == same_class);
    if (i != j && same_class) ++r.counters["indiscernible_pairs"];
    if (!same_class && s(i, j) >= 1.0 - kTol) ++r.counters["su_one_distinct_classes"];
    if (!same_class && std::abs(h[i] - h[j]) <= kTol) {
      ++r.counters["equal_entropy_distinct_classes"];
    }
  });

  detail::for_each_tuple(n, 3, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t x = t[0];
    const std::size_t y = t[1];
    const std::size_t z = t[2];
    triangle.at_most({x, y, z}, s(x, y) + s(y, z), s(x, z) + s(y, y));
  });

  r.name_witnesses(d.column_names());
  return r;
}

AxiomReport check_distance_axioms(const DistanceMatrix& m,
                                  std::span<const CanonicalClass> class_keys,
                                  const TupleSampling& sampling) {
  const std::size_t n = m.size();
  if (class_keys.size() != n || m.values.size() != n * n) {
    throw StructuralError("distance matrix and class keys disagree in size");
  }
  AxiomReport r;
  PropertyCheck& non_negativity = r.add("non_negativity", kTol);
  PropertyCheck& symmetry = r.add("symmetry", kTol);
  PropertyCheck& triangle = r.add("triangle", kTol);
  PropertyCheck& indiscernibles = r.add("indiscernibles", 0.0);
  PropertyCheck& normalized = r.add("normalized", kTol);
  r.counters["zero_distance_pairs"] = 0;

  detail::for_each_tuple(n, 2, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t i = t[0];
    const std::size_t j = t[1];
    non_negativity.at_most({i, j}, 0.0, m.at(i, j));
    symmetry.equal({i, j}, m.at(i, j), m.at(j, i));
    normalized.at_most({i, j}, m.at(i, j), 1.0);
    const bool zero = m.at(i, j) <= kTol;
    indiscernibles.exact({i, j}, zero == (class_keys[i] == class_keys[j]));
    if (i != j && zero) ++r.counters["zero_distance_pairs"];
  });

  detail::for_each_tuple(n, 3, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t x = t[0];
    const std::size_t y = t[1];
    const std::size_t z = t[2];
    triangle.at_most({x, y, z}, m.at(x, z), m.at(x, y) + m.at(y, z));
  });

  r.name_witnesses(m.names);
  return r;
}

PropertyReport check_identities(std::span<const Partition> parts,
                                const std::vector<std::string>& names,
                                const TupleSampling& sampling) {
  PropertyReport r;
  PropertyCheck& su_forms = r.add("su_forms", kTol);
  PropertyCheck& mi_forms = r.add("mi_forms", kTol);
  PropertyCheck& mi_symmetry = r.add("mi_symmetry", kTol);
  PropertyCheck& distance_forms = r.add("distance_forms", kTol);
  PropertyCheck& joint_decomposition = r.add("joint_decomposition", kTol);
  PropertyCheck& entropy_chain = r.add("entropy_chain", kTol);
  PropertyCheck& ratio_bounds = r.add("ratio_bounds", kTol);

  detail::for_each_tuple(parts.size(), 2, sampling, [&](const std::vector<std::size_t>& t) {
    const Partition& x = parts[t[0]];
    const Partition& y = parts[t[1]];
    const double hx = entropy(x).value();
    const double hy = entropy(y).value();
    const double hxy = joint_entropy(x, y).value();
    const double hx_y = conditional_entropy(x, y).value();
    const double su = symmetric_uncertainty(x, y);

    su_forms.equal(t, su, symmetric_uncertainty_via_joint(x, y));
    mi_forms.equal(t, mutual_information(x, y).value(), mutual_information_via_joint(x, y).value());
    mi_symmetry.equal(t, mutual_information(x, y).value(), mutual_information(y, x).value());
    joint_decomposition.equal(t, hxy, hy + hx_y);

    const double chain_slack = std::min({hx_y, hx - hx_y, hxy - hx, hx + hy - hxy});
    entropy_chain.observe(t, hx_y, hx + hy, chain_slack);

    if (hx + hy > 0.0) {
      distance_forms.equal(t, 1.0 - su, symmetric_distance(x, y));
      const double ratio = entropic_ratio(x, y);
      const double bound_slack = std::min(ratio - 0.5, 1.0 - ratio);
      const double su_slack = -std::abs(su - 2.0 * (1.0 - ratio));
      ratio_bounds.observe(t, ratio, 2.0 * (1.0 - ratio), std::min(bound_slack, su_slack));
    }
  });

  r.name_witnesses(names);
  return r;
}

PropertyReport check_identities(const Dataset& d, const TupleSampling& sampling) {
  const std::vector<Partition> parts = partitions_of(d);
  return check_identities(parts, d.column_names(), sampling);
}

// ---------------------------------------------------------------------------

std::vector<DemoPoint> nondiscreteness_demo(std::size_t steps) {
  if (steps < 2 || steps > 20) throw ConfigError("steps must be between 2 and 20");
  std::vector<DemoPoint> out;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t rows = std::size_t{4} << i;
    const std::size_t prefix = rows / 2;
    auto universe = std::make_shared<const RowWeights>(rows);
    std::vector<std::uint32_t> x(rows, 0);
    std::vector<std::uint32_t> y(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      x[r] = r < prefix ? 1 : 0;
      y[r] = r < prefix + 1 ? 1 : 0;
    }
    const Partition px(universe, x);
    const Partition py(universe, y);
    out.push_back({rows, prefix, 1.0 / static_cast<double>(rows), su_distance(px, py)});
  }
  return out;
}

PropertyReport check_nondiscreteness(std::span<const DemoPoint> points, bool require_small) {
  PropertyReport r;
  PropertyCheck& positive = r.add("positive", 0.0);
  PropertyCheck& decreasing = r.add("strictly_decreasing", 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    positive.exact({points[i].rows}, points[i].distance > 0.0);
    if (i > 0) {
      decreasing.exact({points[i - 1].rows, points[i].rows},
                       points[i].distance < points[i - 1].distance);
    }
  }
  if (require_small) {
    PropertyCheck& small = r.add("below_0_05", 0.0);
    const bool any = std::any_of(points.begin(), points.end(), [](const DemoPoint& p) {
      return p.rows <= 4096 && p.distance < 0.05;
    });
    small.exact({}, any);
  }
  return r;
}

}  // namespace catsu

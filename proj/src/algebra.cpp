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

#include "catsu/algebra.hpp"

#include <cmath>

#include "catsu/entropy.hpp"
#include "catsu/error.hpp"
#include "tuples.hpp"

namespace catsu {

namespace {

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    if (c == '\\' || c == '(' || c == ')' || c == ',') out += '\\';
    out += c;
  }
}

// Columns of d followed by Phi, with their partitions.
struct Pool {
  std::vector<CategoricalVariable> vars;
  std::vector<Partition> parts;
  std::vector<std::string> names;

  explicit Pool(const Dataset& d) {
    for (const CategoricalVariable& c : d.columns()) vars.push_back(c);
    vars.push_back(identity_variable(d));
    for (const CategoricalVariable& v : vars) {
      parts.push_back(induced_partition(v, d));
      names.push_back(v.name());
    }
  }
  std::size_t size() const { return vars.size(); }
};

// Injective relabeling that shares no symbol with the original alphabet.
std::string relabel_symbol(const std::string& s) { return "~" + s; }

}  // namespace

std::string encode_pair_label(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(left.size() + right.size() + 3);
  out += '(';
  append_escaped(out, left);
  out += ',';
  append_escaped(out, right);
  out += ')';
  return out;
}

std::pair<std::string, std::string> decode_pair_label(std::string_view label) {
  if (label.size() < 3 || label.front() != '(' || label.back() != ')') {
    throw StructuralError("not a pair label: '" + std::string(label) + "'");
  }
  std::string parts[2];
  int k = 0;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    const char c = label[i];
    if (c == '\\') {
      if (i + 2 >= label.size()) throw StructuralError("dangling escape in pair label");
      parts[k] += label[++i];
    } else if (c == ',') {
      if (k == 1) throw StructuralError("unescaped ',' in pair label");
      k = 1;
    } else if (c == '(' || c == ')') {
      throw StructuralError("unescaped parenthesis in pair label");
    } else {
      parts[k] += c;
    }
  }
  if (k != 1) throw StructuralError("pair label without separator");
  return {std::move(parts[0]), std::move(parts[1])};
}

JointVariable joint(const CategoricalVariable& a, const CategoricalVariable& b, const Dataset& d) {
  if (a.size() != d.row_count() || b.size() != d.row_count()) {
    throw StructuralError("joint of columns not on the dataset");
  }
  std::vector<std::string> labels;
  labels.reserve(d.row_count());
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    labels.push_back(encode_pair_label(a.label(r), b.label(r)));
  }
  return {CategoricalVariable(a.name() + "*" + b.name(), std::move(labels)), a.name(), b.name()};
}

CategoricalVariable identity_variable(const Dataset& d) {
  return CategoricalVariable(std::string(kIdentityName),
                             std::vector<std::string>(d.row_count(), std::string(kIdentityLabel)));
}

bool are_indiscernible(const CategoricalVariable& a, const CategoricalVariable& b,
                       const Dataset& d) {
  return canonicalize(a, d) == canonicalize(b, d);
}

LawReport check_monoid_laws(const Dataset& d, const TupleSampling& sampling) {
  const Pool pool(d);
  const std::size_t n = pool.size();
  const std::size_t phi = n - 1;

  // Pair joints, reused by the triple checks.
  std::vector<CategoricalVariable> pairs;
  pairs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairs.push_back(joint(pool.vars[i], pool.vars[j], d).variable);
  }
  auto pair = [&](std::size_t i, std::size_t j) -> const CategoricalVariable& {
    return pairs[i * n + j];
  };

  LawReport r;
  PropertyCheck& associativity = r.add("associativity", 0.0);
  PropertyCheck& commutativity = r.add("commutativity", 0.0);
  PropertyCheck& identity = r.add("identity", 0.0);
  PropertyCheck& joint_is_join = r.add("joint_is_join", 0.0);
  PropertyCheck& well_definedness = r.add("well_definedness", 0.0);
  PropertyCheck& su_invariance = r.add("su_quotient_invariance", 0.0);
  r.counters["triples_with_identity"] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const CanonicalClass a = canonicalize(pool.parts[i]);
    identity.exact({i, phi}, canonicalize(pair(i, phi), d) == a &&
                                 canonicalize(pair(phi, i), d) == a);
  }

  detail::for_each_tuple(n, 2, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t i = t[0];
    const std::size_t j = t[1];
    const Partition ab = induced_partition(pair(i, j), d);
    commutativity.exact(t, canonicalize(ab) == canonicalize(pair(j, i), d));
    joint_is_join.exact(t, ab == join(pool.parts[i], pool.parts[j]));

    const CategoricalVariable a2 = pool.vars[i].relabeled(relabel_symbol);
    const CategoricalVariable b2 = pool.vars[j].relabeled(relabel_symbol);
    const bool representatives_ok =
        are_indiscernible(a2, pool.vars[i], d) && are_indiscernible(b2, pool.vars[j], d);
    well_definedness.exact(
        t, representatives_ok && canonicalize(joint(a2, b2, d).variable, d) == canonicalize(ab));

    const double su = symmetric_uncertainty(pool.parts[i], pool.parts[j]);
    const double su2 = symmetric_uncertainty(induced_partition(a2, d), pool.parts[j]);
    su_invariance.observe(t, su2, su, su2 == su ? 0.0 : -std::abs(su2 - su) - 1.0);
  });

  detail::for_each_tuple(n, 3, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t a = t[0];
    const std::size_t b = t[1];
    const std::size_t c = t[2];
    const CategoricalVariable left = joint(pair(a, b), pool.vars[c], d).variable;
    const CategoricalVariable right = joint(pool.vars[a], pair(b, c), d).variable;
    associativity.exact(t, canonicalize(left, d) == canonicalize(right, d));
    if (a == phi || b == phi || c == phi) ++r.counters["triples_with_identity"];
  });

  r.name_witnesses(pool.names);
  return r;
}

LawReport check_contractivity(const Dataset& d, const TupleSampling& sampling) {
  const Pool pool(d);
  const std::size_t n = pool.size();

  std::vector<Partition> pairs;
  pairs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pairs.push_back(induced_partition(joint(pool.vars[i], pool.vars[j], d).variable, d));
    }
  }
  std::vector<double> base(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = su_distance(pool.parts[i], pool.parts[j]);
  }

  LawReport r;
  PropertyCheck& contractive = r.add("contractivity", kEntropyTolerance);
  detail::for_each_tuple(n, 4, sampling, [&](const std::vector<std::size_t>& t) {
    const std::size_t x = t[0];
    const std::size_t y = t[1];
    const std::size_t z = t[2];
    const std::size_t w = t[3];
    const double lhs = su_distance(pairs[x * n + y], pairs[z * n + w]);
    contractive.at_most(t, lhs, base[x * n + z] + base[y * n + w]);
  });
  r.name_witnesses(pool.names);
  return r;
}

}  // namespace catsu

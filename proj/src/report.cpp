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

#include "catsu/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catsu/error.hpp"

namespace catsu {

void PropertyCheck::observe(std::vector<std::size_t> indices, double lhs, double rhs,
                            double slack) {
  ++evaluated;
  const bool ok = slack >= -tolerance;
  if (!ok) {
    ++violations;
    passed = false;
  }
  if (!witness || slack < worst_slack) {
    worst_slack = slack;
    witness = Witness{std::move(indices), {}, lhs, rhs, slack};
  }
}

void PropertyCheck::equal(std::vector<std::size_t> indices, double lhs, double rhs) {
  observe(std::move(indices), lhs, rhs, -std::abs(lhs - rhs));
}

PropertyCheck& PropertyReport::add(std::string name, double tolerance) {
  PropertyCheck c;
  c.name = std::move(name);
  c.tolerance = tolerance;
  checks.push_back(std::move(c));
  return checks.back();
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

const PropertyCheck& PropertyReport::check(std::string_view name) const {
  for (const PropertyCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw LookupError("no check named '" + std::string(name) + "'");
}

PropertyCheck& PropertyReport::check(std::string_view name) {
  return const_cast<PropertyCheck&>(std::as_const(*this).check(name));
}

void PropertyReport::name_witnesses(const std::vector<std::string>& names) {
  for (PropertyCheck& c : checks) {
    if (!c.witness) continue;
    c.witness->names.clear();
    for (std::size_t i : c.witness->indices) {
      c.witness->names.push_back(i < names.size() ? names[i] : "#" + std::to_string(i));
    }
  }
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const PropertyCheck& o : other.checks) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const PropertyCheck& c) { return c.name == o.name; });
    if (it == checks.end()) {
      checks.push_back(o);
      continue;
    }
    it->evaluated += o.evaluated;
    it->violations += o.violations;
    it->passed = it->passed && o.passed;
    if (o.witness && (!it->witness || o.worst_slack < it->worst_slack)) {
      it->worst_slack = o.worst_slack;
      it->witness = o.witness;
    }
  }
  for (const auto& [k, v] : other.counters) counters[k] += v;
}

std::string PropertyReport::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const PropertyCheck& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " evaluated=" << c.evaluated
       << " violations=" << c.violations;
    if (c.witness) {
      os << " worst_slack=" << c.worst_slack;
      if (!c.passed) {
        os << "\n  witness:";
        for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
          os << ' '
             << (i < c.witness->names.size() ? c.witness->names[i]
                                             : std::to_string(c.witness->indices[i]));
        }
        os << "  lhs=" << c.witness->lhs << " rhs=" << c.witness->rhs;
      }
    }
    os << '\n';
  }
  for (const auto& [k, v] : counters) os << "count " << k << ' ' << v << '\n';
  return os.str();
}

}  // namespace catsu

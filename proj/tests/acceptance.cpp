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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "catsu/algebra.hpp"
#include "catsu/entropy.hpp"
#include "catsu/ingest.hpp"
#include "catsu/metric.hpp"
#include "catsu/randgen.hpp"

namespace {

using namespace catsu;

constexpr std::size_t kRandomDatasets = 1000;

// The random population shared by criteria 4-8 and 10: at most 12 rows,
// 4 symbols per column and 5 columns, cycling through all generator modes.
std::vector<Dataset> random_population() {
  std::vector<Dataset> out;
  out.reserve(kRandomDatasets);
  for (std::uint64_t i = 0; i < kRandomDatasets; ++i) {
    GenConfig cfg;
    cfg.seed = 1000 + i;
    cfg.rows = {2, 12};
    cfg.alphabet_size = {1, 4};
    cfg.mode = static_cast<CorrelationMode>(i % 4);
    cfg.weighted_rows = i % 10 == 9;
    out.push_back(gen_dataset(cfg, 5));
  }
  return out;
}

// Failures are aggregated per check so a criterion prints a few lines, not
// one report per dataset.
struct Outcome {
  struct Tally {
    std::size_t instances = 0;
    std::size_t violations = 0;
    double worst_slack = 0.0;
    std::string worst;
  };

  bool pass = true;
  std::ostringstream detail;
  std::ostringstream info;  // printed whatever the outcome
  std::map<std::string, Tally> tallies;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << "  " << what << '\n';
    }
  }
  void require(const PropertyReport& r, const std::string& where) {
    for (const PropertyCheck& c : r.checks) {
      if (c.passed) continue;
      pass = false;
      Tally& t = tallies[c.name];
      ++t.instances;
      t.violations += c.violations;
      if (t.worst.empty() || c.worst_slack < t.worst_slack) {
        t.worst_slack = c.worst_slack;
        std::ostringstream w;
        w << where;
        if (c.witness) {
          w << " witness:";
          for (const std::string& n : c.witness->names) w << ' ' << n;
          w << " lhs=" << format_full(c.witness->lhs) << " rhs=" << format_full(c.witness->rhs);
        }
        t.worst = w.str();
      }
    }
  }
  std::string summary() const {
    std::ostringstream out;
    for (const auto& [name, t] : tallies) {
      out << "  " << name << ": " << t.violations << " violations in " << t.instances
          << " instances, worst slack " << format_full(t.worst_slack) << "\n    at " << t.worst
          << '\n';
    }
    return out.str() + detail.str();
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<CanonicalClass> keys_of(const Dataset& d) {
  std::vector<CanonicalClass> k;
  for (const auto& c : d.columns()) k.push_back(canonicalize(c, d));
  return k;
}

Partition part(const Dataset& d, std::string_view name) {
  return induced_partition(d.column(name), d);
}

}  // namespace

int main() {
  const Dataset internship = fixtures::internship();
  const Dataset indiscernibles = fixtures::indiscernibles();
  const std::vector<Dataset> population = random_population();

  std::vector<const Dataset*> all;
  all.push_back(&internship);
  all.push_back(&indiscernibles);
  for (const Dataset& d : population) all.push_back(&d);

  // Partitions checked by criterion 10 beyond the plain columns: every
  // pairwise joint, the objects compared in criteria 7 and 8.
  std::size_t identity_instances = 0;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "SU values against GotHired on the internship fixture", 1.0, [&](Outcome& o) {
    const std::pair<const char*, double> expected[] = {{"Neatness", 0.0535},
                                                       {"Creativity", 0.4627},
                                                       {"Punctuality", 0.0535},
                                                       {"IQuotient", 0.0535},
                                                       {"AttentionType", 0.0192}};
    const Partition g = part(internship, "GotHired");
    for (const auto& [name, v] : expected) {
      const double su = symmetric_uncertainty(part(internship, name), g);
      o.require(std::abs(su - v) <= 5e-5,
                std::string(name) + ": " + format_full(su) + " vs " + format_full(v));
    }
  }});

  criteria.push_back({2, "Creativity x GotHired contingency counts", 1.0, [&](Outcome& o) {
    const ContingencyTable t =
        contingency(internship.column("Creativity"), internship.column("GotHired"), internship);
    const std::tuple<const char*, const char*, int> cells[] = {
        {"D", "Y", 8}, {"D", "N", 1}, {"S", "Y", 1}, {"S", "N", 4}, {"I", "Y", 0}, {"I", "N", 6}};
    o.require(t.rows() == 3 && t.cols() == 2, "table is not 3x2");
    for (const auto& [x, y, n] : cells) {
      o.require(t.cell(x, y) * Rational(20) == Rational(n),
                std::string(x) + "/" + y + " = " + t.cell(x, y).to_string());
    }
  }});

  criteria.push_back({3, "indiscernible pair X1, X2", 1.0, [&](Outcome& o) {
    for (const char* name : {"X1", "X2"}) {
      std::vector<Rational> probs = part(indiscernibles, name).block_probabilities();
      std::sort(probs.begin(), probs.end());
      o.require(probs == std::vector<Rational>{Rational(1, 10), Rational(2, 5), Rational(1, 2)},
                std::string(name) + " marginals");
    }
    o.require(are_indiscernible(indiscernibles.column("X1"), indiscernibles.column("X2"),
                                indiscernibles),
              "are_indiscernible is false");
    const double su =
        symmetric_uncertainty(part(indiscernibles, "X1"), part(indiscernibles, "X2"));
    o.require(std::abs(su - 1.0) <= 1e-12, "SU = " + format_full(su));
  }});

  criteria.push_back({4, "similarity axioms, internship + 1000 random datasets", 60.0, [&](Outcome& o) {
    const PropertyReport t2 = check_similarity_axioms(internship);
    o.require(t2, "internship");
    o.require(t2.check("triangle").evaluated == 216, "internship triples not exhaustive");
    o.require(check_similarity_axioms(indiscernibles), "indiscernibles");
    for (std::size_t i = 0; i < population.size(); ++i) {
      o.require(check_similarity_axioms(population[i]), "random #" + std::to_string(i));
    }
  }});

  criteria.push_back({5, "distance axioms, same population", 60.0, [&](Outcome& o) {
    std::uint64_t zero_pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Dataset& d = *all[i];
      const PropertyReport r = check_distance_axioms(distance_matrix(d), keys_of(d));
      o.require(r, "dataset #" + std::to_string(i));
      zero_pairs += r.counters.at("zero_distance_pairs");
    }
    o.require(zero_pairs > 0, "d = 0 direction never exercised");
    o.info << "  zero-distance pairs=" << zero_pairs << '\n';
  }});

  criteria.push_back({6, "relative-entropy lemma on random triples", 60.0, [&](Outcome& o) {
    std::size_t triples = 0;
    std::size_t active = 0;
    auto run = [&](const Dataset& d, std::size_t x, std::size_t y, std::size_t z,
                   const std::string& where) {
      const Lemma2Report r = check_lemma2(induced_partition(d.columns()[x], d),
                                          induced_partition(d.columns()[y], d),
                                          induced_partition(d.columns()[z], d));
      ++triples;
      active += r.refinement_active;
      for (const ClauseResult& c : r.clauses) {
        o.require(c.holds, where + " clause " + c.name + " lhs=" + format_full(c.lhs) +
                               " rhs=" + format_full(c.rhs));
      }
    };
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      GenConfig cfg;
      cfg.seed = 50000 + seed;
      cfg.mode = CorrelationMode::refined;
      run(gen_dataset(cfg, 3), 0, 1, 2, "refined seed " + std::to_string(cfg.seed));
    }
    for (std::size_t i = 0; i < population.size(); ++i) {
      run(population[i], 0, 1, 2, "random #" + std::to_string(i));
      run(population[i], 2, 3, 4, "random #" + std::to_string(i));
    }
    const std::size_t n = internship.column_count();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) run(internship, x, y, z, "internship");
    o.require(triples >= 1000, "too few triples");
    o.require(active >= 100, "refinement clauses active only " + std::to_string(active) + " times");
    o.info << "  triples=" << triples << " refinement_active=" << active << '\n';
  }});

  criteria.push_back({7, "monoid laws, exact canonical equality", 60.0, [&](Outcome& o) {
    const LawReport t2 = check_monoid_laws(internship);
    o.require(t2, "internship");
    o.require(t2.check("associativity").evaluated == 7 * 7 * 7, "internship triples not exhaustive");
    std::size_t triples = 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      const LawReport r = check_monoid_laws(population[i]);
      o.require(r, "random #" + std::to_string(i));
      triples += r.check("associativity").evaluated;
    }
    o.require(triples >= 1000, "too few random triples");
  }});

  criteria.push_back({8, "contractivity of the joint", 120.0, [&](Outcome& o) {
    const LawReport t2 = check_contractivity(internship);
    o.require(t2, "internship");
    o.require(t2.check("contractivity").evaluated >= 6 * 6 * 6 * 6,
              "internship quadruples not exhaustive");
    std::size_t quads = 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      const LawReport r = check_contractivity(population[i]);
      o.require(r, "random #" + std::to_string(i));
      quads += r.check("contractivity").evaluated;
    }
    o.require(quads >= 1000, "too few random quadruples");
  }});

  criteria.push_back({9, "nested-indicator distances shrink to zero", 5.0, [&](Outcome& o) {
    const auto points = nondiscreteness_demo(11);
    o.require(check_nondiscreteness(points), "demo");
    for (const DemoPoint& p : points) {
      o.info << "  n=" << p.rows << " d=" << format_full(p.distance) << '\n';
    }
  }});

  criteria.push_back({10, "SU, MI and distance forms agree on every instance", 120.0, [&](Outcome& o) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Dataset& d = *all[i];
      o.require(check_identities(d), "dataset #" + std::to_string(i));

      // Columns, Phi and all pairwise joints.
      std::vector<CategoricalVariable> base(d.columns().begin(), d.columns().end());
      base.push_back(identity_variable(d));
      std::vector<Partition> parts;
      std::vector<std::string> names;
      for (const auto& a : base) {
        parts.push_back(induced_partition(a, d));
        names.push_back(a.name());
      }
      for (const auto& a : base) {
        for (const auto& b : base) {
          const CategoricalVariable j = joint(a, b, d).variable;
          parts.push_back(induced_partition(j, d));
          names.push_back(j.name());
        }
      }
      TupleSampling sampling;
      sampling.exhaustive_limit = parts.size();
      const PropertyReport r = check_identities(parts, names, sampling);
      o.require(r, "joint pool of dataset #" + std::to_string(i));
      identity_instances += r.check("su_forms").evaluated;
    }
    o.info << "  joint-pool pairs=" << identity_instances << '\n';
  }});

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "  exception: " << e.what() << '\n';
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail << "  took " << secs << " s, limit " << c.limit_seconds << " s\n";
    }
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %d: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                secs);
    std::cout << o.info.str();
    if (!o.pass) std::cout << o.summary();
  }
  std::cout.flush();
  return all_pass ? 0 : 1;
}

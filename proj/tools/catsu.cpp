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

// catsu: symmetric uncertainty, the 1 - SU metric and the joint monoid on
// the columns of a categorical CSV file.
//
// Exit codes: 0 success (and every property held), 1 a validator found a
// violation, 2 usage, input or lookup error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "catsu/algebra.hpp"
#include "catsu/entropy.hpp"
#include "catsu/error.hpp"
#include "catsu/ingest.hpp"
#include "catsu/metric.hpp"
#include "catsu/randgen.hpp"

namespace {

using namespace catsu;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  bool full = false;
  bool drop_na = false;
  char delimiter = ',';
};

struct RandomOptions {
  std::optional<std::uint64_t> seed;
  std::size_t count = 1000;
  std::size_t columns = 5;
  std::size_t max_rows = 12;
  std::size_t max_symbols = 4;
  std::string mode;
  bool weighted = false;
};

std::string show(double v, const GlobalOptions& g) {
  if (g.full) return format_full(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Dataset read_input(const std::string& path, const GlobalOptions& g) {
  CsvSpec spec;
  spec.delimiter = g.delimiter;
  spec.na_policy = g.drop_na ? NaPolicy::drop_row : NaPolicy::keep_as_category;
  if (path == "-") return load_csv(std::cin, spec);
  return load_csv(std::filesystem::path(path), spec);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------

int cmd_su(const GlobalOptions& g, const std::string& input, const std::string& a,
           const std::string& b) {
  const Dataset d = read_input(input, g);
  const Partition pa = induced_partition(d.column(a), d);
  const Partition pb = induced_partition(d.column(b), d);
  const double su = symmetric_uncertainty(pa, pb);
  std::cout << "SU: " << show(su, g) << '\n';
  std::cout << "distance: " << show(1.0 - su, g) << '\n';
  try {
    std::cout << "entropic_ratio: " << show(entropic_ratio(pa, pb), g) << '\n';
  } catch (const UndefinedRatioError&) {
    std::cout << "entropic_ratio: undefined\n";
  }
  std::cout << "MI: " << show(mutual_information(pa, pb).value(), g) << '\n';
  std::cout << "H(A): " << show(entropy(pa).value(), g) << '\n';
  std::cout << "H(B): " << show(entropy(pb).value(), g) << '\n';
  std::cout << "H(A,B): " << show(joint_entropy(pa, pb).value(), g) << '\n';
  return kExitOk;
}

int cmd_rank(const GlobalOptions& g, const std::string& input, const std::string& class_col) {
  const Dataset d = read_input(input, g);
  const Partition target = induced_partition(d.column(class_col), d);
  struct Row {
    std::string name;
    double su;
    long long key;
  };
  std::vector<Row> rows;
  for (const CategoricalVariable& c : d.columns()) {
    if (c.name() == class_col) continue;
    const double su = symmetric_uncertainty(induced_partition(c, d), target);
    // Values equal to 12 decimals count as ties and fall back to the name.
    rows.push_back({c.name(), su, std::llround(su * 1e12)});
  }
  if (rows.empty()) throw LookupError("no feature columns besides '" + class_col + "'");
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return x.key != y.key ? x.key > y.key : x.name < y.name;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::cout << i + 1 << '\t' << rows[i].name << '\t' << show(rows[i].su, g) << '\n';
  }
  return kExitOk;
}

int cmd_dist(const GlobalOptions& g, const std::string& input,
             const std::vector<std::string>& columns, const std::string& format, bool similarity) {
  const Dataset d = read_input(input, g);
  const MatrixFormat fmt = parse_matrix_format(format);
  const std::optional<std::vector<std::string>> subset =
      columns.empty() ? std::nullopt : std::optional(columns);
  const NamedMatrix m = similarity ? similarity_matrix(d, subset) : distance_matrix(d, subset);
  std::cout << save_matrix(m, fmt);
  return kExitOk;
}

int cmd_joint(const GlobalOptions& g, const std::string& input,
              const std::vector<std::string>& columns, const std::string& out) {
  const Dataset d = read_input(input, g);
  CategoricalVariable acc = d.column(columns.at(0));
  for (std::size_t i = 1; i < columns.size(); ++i) {
    acc = joint(acc, d.column(columns[i]), d).variable;
  }
  if (columns.size() == 1) acc = acc.renamed(acc.name() + "*");
  write_output(out, to_csv(d.with_column(std::move(acc)), g.delimiter));
  return kExitOk;
}

int cmd_classes(const GlobalOptions& g, const std::string& input, bool by_signature) {
  const Dataset d = read_input(input, g);
  std::vector<CanonicalClass> keys;
  std::vector<std::vector<std::string>> groups;
  for (const CategoricalVariable& c : d.columns()) {
    const CanonicalClass k = canonicalize(c, d);
    auto same = [&](const CanonicalClass& o) {
      return by_signature ? same_signature(o, k) : o == k;
    };
    auto it = std::find_if(keys.begin(), keys.end(), same);
    if (it == keys.end()) {
      keys.push_back(k);
      groups.push_back({c.name()});
    } else {
      groups[static_cast<std::size_t>(it - keys.begin())].push_back(c.name());
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::cout << "class " << i + 1 << ':';
    for (const std::string& n : groups[i]) std::cout << ' ' << n;
    std::cout << "\t[";
    for (std::size_t k = 0; k < keys[i].signature().size(); ++k) {
      std::cout << (k ? " " : "") << keys[i].signature()[k];
    }
    std::cout << "]\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Validators share one driver: run `check` on the input file, or on
// `count` generated datasets with seeds seed, seed+1, ...

using Checker = std::function<PropertyReport(const Dataset&)>;

int run_checks(const GlobalOptions& g, const std::optional<std::string>& input,
               const RandomOptions& ro, CorrelationMode default_mode, std::size_t min_columns,
               const Checker& check) {
  PropertyReport total;
  bool failed = false;
  if (!ro.seed) {
    if (!input) throw ConfigError("give an input file or --random SEED");
    total = check(read_input(*input, g));
    failed = !total.passed();
  } else {
    GenConfig cfg;
    cfg.rows = {2, ro.max_rows};
    cfg.alphabet_size = {1, ro.max_symbols};
    cfg.mode = ro.mode.empty() ? default_mode : parse_correlation_mode(ro.mode);
    cfg.weighted_rows = ro.weighted;
    const std::size_t columns = std::max(ro.columns, min_columns);
    for (std::size_t i = 0; i < ro.count; ++i) {
      cfg.seed = *ro.seed + i;
      const PropertyReport r = check(gen_dataset(cfg, columns));
      if (!r.passed() && !failed) {
        failed = true;
        std::cout << "first violation in generated dataset seed=" << cfg.seed << '\n'
                  << r.to_text();
      }
      total.merge(r);
    }
    total.counters["datasets"] = ro.count;
  }
  std::cout << total.to_text() << (failed ? "VIOLATION\n" : "OK\n");
  return failed ? kExitViolation : kExitOk;
}

PropertyReport metric_check(const Dataset& d) {
  PropertyReport r = check_similarity_axioms(d);
  std::vector<CanonicalClass> keys;
  for (const CategoricalVariable& c : d.columns()) keys.push_back(canonicalize(c, d));
  PropertyReport dist = check_distance_axioms(distance_matrix(d), keys);
  for (auto& c : dist.checks) c.name = "distance_" + c.name;
  std::map<std::string, std::uint64_t> renamed;
  for (auto& [k, v] : dist.counters) renamed["distance_" + k] = v;
  dist.counters = std::move(renamed);
  for (auto& c : r.checks) c.name = "similarity_" + c.name;
  r.merge(dist);
  r.merge(check_identities(d));
  return r;
}

PropertyReport lemma2_check(const Dataset& d) {
  std::vector<Partition> parts;
  for (const CategoricalVariable& c : d.columns()) parts.push_back(induced_partition(c, d));
  PropertyReport r;
  const std::size_t n = parts.size();
  auto visit = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Lemma2Report lr = check_lemma2(parts[x], parts[y], parts[z]);
    for (const ClauseResult& c : lr.clauses) {
      PropertyCheck* pc = nullptr;
      for (auto& existing : r.checks) {
        if (existing.name == c.name) pc = &existing;
      }
      if (!pc) pc = &r.add(c.name, 0.0);
      pc->exact({x, y, z}, c.holds);
    }
    if (lr.refinement_active) ++r.counters["refinement_active"];
  };
  if (n <= 8) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) visit(x, y, z);
  } else {
    SplitMix64 rng(0);
    for (int s = 0; s < 20000; ++s) visit(rng.below(n), rng.below(n), rng.below(n));
  }
  r.name_witnesses(d.column_names());
  return r;
}

void add_random_options(CLI::App* sub, RandomOptions& ro) {
  sub->add_option("--random", ro.seed, "Validate generated datasets starting from this seed");
  sub->add_option("--count", ro.count, "Number of generated datasets")->capture_default_str();
  sub->add_option("--columns", ro.columns, "Columns per generated dataset")->capture_default_str();
  sub->add_option("--max-rows", ro.max_rows, "Rows per dataset drawn from 2..N")
      ->capture_default_str();
  sub->add_option("--max-symbols", ro.max_symbols, "Symbols per column drawn from 1..N")
      ->capture_default_str();
  sub->add_option("--mode", ro.mode, "independent | refined | noisy-copy | arbitrary");
  sub->add_flag("--weighted", ro.weighted, "Draw non-uniform row weights");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric uncertainty metric and joint monoid on categorical columns"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--full", g.full, "Print 17 significant digits instead of 4 decimals");
  app.add_flag("--drop-na", g.drop_na, "Drop rows with empty cells instead of using <NA>");
  app.add_option("--delimiter", g.delimiter, "CSV field delimiter")->capture_default_str();

  std::string input;
  std::optional<std::string> check_input;
  std::string col_a;
  std::string col_b;
  std::vector<std::string> columns;
  std::string format = "tsv";
  std::string out = "-";
  bool flag = false;
  std::size_t steps = 10;
  RandomOptions ro;
  std::function<int()> action;

  auto* su = app.add_subcommand("su", "SU, distance, entropic ratio, MI and entropies of two columns");
  su->add_option("input", input, "CSV file or - for stdin")->required();
  su->add_option("a", col_a)->required();
  su->add_option("b", col_b)->required();
  su->callback([&] { action = [&] { return cmd_su(g, input, col_a, col_b); }; });

  auto* rank = app.add_subcommand("rank", "Rank features by SU against a class column");
  rank->add_option("input", input)->required();
  rank->add_option("class", col_a)->required();
  rank->callback([&] { action = [&] { return cmd_rank(g, input, col_a); }; });

  auto* dist = app.add_subcommand("dist", "Write the 1 - SU distance matrix");
  dist->add_option("input", input)->required();
  dist->add_option("--columns", columns, "Restrict to these columns")->delimiter(',');
  dist->add_option("--format", format, "tsv | json")->capture_default_str();
  dist->add_flag("--similarity", flag, "Write SU instead of 1 - SU");
  dist->callback([&] { action = [&] { return cmd_dist(g, input, columns, format, flag); }; });

  auto* jt = app.add_subcommand("joint", "Append the joint of the given columns");
  jt->add_option("input", input)->required();
  jt->add_option("columns", columns, "Columns to join, left to right")->required();
  jt->add_option("--out", out, "Output CSV path or -")->capture_default_str();
  jt->callback([&] { action = [&] { return cmd_joint(g, input, columns, out); }; });

  auto* classes = app.add_subcommand("classes", "Group columns into indiscernibility classes");
  classes->add_option("input", input)->required();
  classes->add_flag("--signature", flag, "Group by histogram signature only");
  classes->callback([&] { action = [&] { return cmd_classes(g, input, flag); }; });

  auto* cm = app.add_subcommand("check-metric", "Validate similarity and distance axioms");
  cm->add_option("input", check_input);
  add_random_options(cm, ro);
  cm->callback([&] {
    action = [&] {
      return run_checks(g, check_input, ro, CorrelationMode::arbitrary, 1, metric_check);
    };
  });

  auto* mon = app.add_subcommand("check-monoid", "Validate the joint operation's monoid laws");
  mon->add_option("input", check_input);
  add_random_options(mon, ro);
  mon->callback([&] {
    action = [&] {
      return run_checks(g, check_input, ro, CorrelationMode::arbitrary, 1,
                        [](const Dataset& d) { return check_monoid_laws(d); });
    };
  });

  auto* con = app.add_subcommand("check-contractivity", "Validate d(X*Y,Z*W) <= d(X,Z)+d(Y,W)");
  con->add_option("input", check_input);
  add_random_options(con, ro);
  con->callback([&] {
    action = [&] {
      return run_checks(g, check_input, ro, CorrelationMode::arbitrary, 1,
                        [](const Dataset& d) { return check_contractivity(d); });
    };
  });

  auto* l2 = app.add_subcommand("check-lemma2", "Validate relative-entropy properties on triples");
  l2->add_option("input", check_input);
  add_random_options(l2, ro);
  l2->callback([&] {
    action = [&] {
      return run_checks(g, check_input, ro, CorrelationMode::refined, 3, lemma2_check);
    };
  });

  auto* demo = app.add_subcommand("demo-nondiscrete", "Distances between nested indicators");
  demo->add_option("--steps", steps, "Number of sizes n = 4, 8, 16, ...")->capture_default_str();
  demo->callback([&] {
    action = [&] {
      const auto points = nondiscreteness_demo(steps);
      std::cout << "n\tepsilon\tdistance\n";
      for (const DemoPoint& p : points) {
        std::cout << p.rows << '\t' << show(p.epsilon, g) << '\t' << show(p.distance, g) << '\n';
      }
      const PropertyReport r = check_nondiscreteness(points, false);
      if (!r.passed()) {
        std::cout << r.to_text();
        return kExitViolation;
      }
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const catsu::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

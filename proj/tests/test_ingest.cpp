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


#include <gtest/gtest.h>

#include <sstream>

#include "catsu/error.hpp"
#include "catsu/ingest.hpp"
#include "catsu/randgen.hpp"

namespace catsu {
namespace {

std::vector<std::string> alphabet(const Dataset& d, std::string_view name) {
  const auto a = d.column(name).alphabet();
  return {a.begin(), a.end()};
}

using Strings = std::vector<std::string>;

TEST(Fixtures, Internship) {
  const Dataset d = fixtures::internship();
  EXPECT_EQ(d.row_count(), 20u);
  EXPECT_EQ(d.column_names(), (Strings{"Neatness", "Creativity", "Punctuality", "IQuotient",
                                       "AttentionType", "GotHired"}));
  auto sorted = [&](std::string_view n) {
    Strings a = alphabet(d, n);
    std::sort(a.begin(), a.end());
    return a;
  };
  EXPECT_EQ(sorted("Neatness"), (Strings{"R", "S", "U"}));
  EXPECT_EQ(sorted("Creativity"), (Strings{"D", "I", "S"}));
  EXPECT_EQ(sorted("Punctuality"), (Strings{"E", "L", "O"}));
  EXPECT_EQ(sorted("IQuotient"), (Strings{"A", "H", "L"}));
  EXPECT_EQ(sorted("AttentionType"), (Strings{"A", "D", "SE", "SU"}));
  EXPECT_EQ(sorted("GotHired"), (Strings{"N", "Y"}));
}

TEST(Fixtures, Indiscernibles) {
  const Dataset d = fixtures::indiscernibles();
  EXPECT_EQ(d.row_count(), 10u);
  EXPECT_EQ(canonicalize(d.column("X1"), d), canonicalize(d.column("X2"), d));
}

TEST(Fixtures, MatchDataDirectory) {
  const Dataset a = load_csv(std::filesystem::path(CATSU_DATA_DIR) / "internship.csv");
  EXPECT_EQ(to_csv(a), to_csv(fixtures::internship()));
}

TEST(Csv, QuotingAndLineEnds) {
  const Dataset lf = parse_csv("a,b\n\"x,1\",\"say \"\"hi\"\"\"\ny,\"two\nlines\"\n");
  EXPECT_EQ(lf.column("a").label(0), "x,1");
  EXPECT_EQ(lf.column("b").label(0), "say \"hi\"");
  EXPECT_EQ(lf.column("b").label(1), "two\nlines");

  const Dataset crlf = parse_csv("a,b\r\nx,y\r\nz,w");
  const Dataset plain = parse_csv("a,b\nx,y\nz,w\n");
  EXPECT_EQ(crlf, plain);
  EXPECT_EQ(parse_csv("\xEF\xBB\xBF" "a,b\nx,y\nz,w\n\n\n"), plain);
}

TEST(Csv, Delimiter) {
  CsvSpec spec;
  spec.delimiter = ';';
  const Dataset d = parse_csv("a;b\nx,1;y\n", spec);
  EXPECT_EQ(d.column("a").label(0), "x,1");
}

TEST(Csv, MissingValues) {
  const std::string text = "a,b\nx,\ny,z\n,w\nq,r\n";
  const Dataset keep = parse_csv(text);
  EXPECT_EQ(keep.row_count(), 4u);
  EXPECT_EQ(keep.column("b").label(0), "<NA>");
  EXPECT_EQ(keep.column("a").label(2), "<NA>");

  CsvSpec drop;
  drop.na_policy = NaPolicy::drop_row;
  const Dataset dropped = parse_csv(text, drop);
  EXPECT_EQ(dropped.row_count(), 2u);
  EXPECT_EQ(dropped.row_weight(0), Rational(1, 2));
  EXPECT_THROW(parse_csv("a\n\"\"\n", drop), EmptyDatasetError);
}

TEST(Csv, Errors) {
  try {
    parse_csv("a,b\nx,y\nz\n");
    FAIL() << "ragged row accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("data row 2"), std::string::npos);
  }
  EXPECT_THROW(parse_csv(""), EmptyDatasetError);
  EXPECT_THROW(parse_csv("a,b\n"), EmptyDatasetError);
  EXPECT_THROW(parse_csv("a,a\nx,y\n"), NameCollisionError);
  EXPECT_THROW(parse_csv("a\n\"open\n"), ParseError);
  EXPECT_THROW(parse_csv("a\nx\"y\n"), ParseError);
  EXPECT_THROW(parse_csv("a\n\"x\"y\n"), ParseError);
  EXPECT_THROW(load_csv(std::filesystem::path("/nonexistent/file.csv")), Error);
}

TEST(Csv, HeaderNamesAreNormalized) {
  const Dataset d = parse_csv("e\xCC\x81\nx\n");
  EXPECT_TRUE(d.has_column("\xC3\xA9"));
}

TEST(Csv, RoundTrip) {
  const std::string tricky = "name,\"with,comma\",q\n\"a \"\"b\"\"\",\"line\nbreak\",φ\n<NA>,x,y\n";
  const Dataset d = parse_csv(tricky);
  EXPECT_EQ(parse_csv(to_csv(d)), d);
  EXPECT_EQ(parse_csv(to_csv(d, '\t'), CsvSpec{'\t', NaPolicy::keep_as_category}), d);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    const Dataset g = gen_dataset(cfg, 4);
    EXPECT_EQ(parse_csv(to_csv(g)), g);
  }
  std::istringstream in(to_csv(d));
  EXPECT_EQ(load_csv(in), d);
}

TEST(Matrix, FormatsRoundTrip) {
  const Dataset d = fixtures::internship();
  const NamedMatrix m = distance_matrix(d);
  for (MatrixFormat f : {MatrixFormat::tsv, MatrixFormat::json}) {
    EXPECT_EQ(parse_matrix(save_matrix(m, f), f), m);
  }
  NamedMatrix odd;
  odd.names = {"tab\there", "quote\"\\"};
  odd.values = {0.0, 0.1, 0.1, 0.0};
  for (MatrixFormat f : {MatrixFormat::tsv, MatrixFormat::json}) {
    EXPECT_EQ(parse_matrix(save_matrix(odd, f), f), odd);
  }
}

TEST(Matrix, MinimalOutput) {
  NamedMatrix m;
  m.names = {"A"};
  m.values = {0.0};
  EXPECT_EQ(save_matrix(m, MatrixFormat::tsv), "\tA\nA\t0\n");
  EXPECT_EQ(save_matrix(m, MatrixFormat::json), "{\"names\": [\"A\"], \"values\": [[0]]}\n");
}

TEST(Matrix, InternshipRowInOutput) {
  const Dataset d = fixtures::internship();
  const NamedMatrix m = parse_matrix(save_matrix(distance_matrix(d), MatrixFormat::tsv),
                                     MatrixFormat::tsv);
  const double printed[5] = {0.0535, 0.4627, 0.0535, 0.0535, 0.0192};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(m.at(5, i), 1.0 - printed[i], 5e-5);
}

TEST(Matrix, FormatNamesAndErrors) {
  EXPECT_EQ(parse_matrix_format("json"), MatrixFormat::json);
  EXPECT_THROW(parse_matrix_format("xml"), ConfigError);
  EXPECT_THROW(parse_matrix("\ta\tb\na\t0\t1\n", MatrixFormat::tsv), StructuralError);
  EXPECT_THROW(parse_matrix("\ta\na\tx\n", MatrixFormat::tsv), StructuralError);
}

TEST(FormatFull, SeventeenDigits) {
  EXPECT_EQ(format_full(0.1), "0.10000000000000001");
  EXPECT_EQ(format_full(1.0), "1");
  const double v = 0.46268937755384703;
  EXPECT_EQ(std::stod(format_full(v)), v);
}

}  // namespace
}  // namespace catsu

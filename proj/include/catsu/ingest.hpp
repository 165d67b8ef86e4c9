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

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "catsu/metric.hpp"
#include "catsu/model.hpp"

namespace catsu {

enum class NaPolicy {
  keep_as_category,  ///< empty cells become the label "<NA>"
  drop_row,          ///< rows with any empty cell are removed
};

/*
 * RFC 4180 CSV: mandatory header row, double-quote quoting with "" as the
 * escaped quote, UTF-8. CRLF and LF line ends are both accepted and a
 * trailing newline is optional.
 */
struct CsvSpec {
  char delimiter = ',';
  NaPolicy na_policy = NaPolicy::keep_as_category;
};

/*
 * One column per header field, uniform row weights.
 *
 * Throws ParseError (with the record's line number) for ragged rows and
 * quoting errors, EmptyDatasetError when there is no data row left, and
 * NameCollisionError for repeated header names.
 */
Dataset load_csv(std::istream& in, const CsvSpec& spec = {});
Dataset load_csv(const std::filesystem::path& path, const CsvSpec& spec = {});
Dataset parse_csv(std::string_view text, const CsvSpec& spec = {});

/// Header plus one record per row, quoting only where needed. Row weights are not written.
std::string to_csv(const Dataset& d, char delimiter = ',');

enum class MatrixFormat { tsv, json };

/*
 * tsv:  a header line "\t" name1 "\t" name2 ..., then one line per row:
 *       name "\t" v1 "\t" v2 ... Names escape \t, \n, \r and \ with a
 *       backslash.
 * json: {"names": [...], "values": [[...], ...]} with row-major values.
 *
 * Values are written with 17 significant digits, so they parse back to
 * the same doubles.
 */
std::string save_matrix(const NamedMatrix& m, MatrixFormat format);
NamedMatrix parse_matrix(std::string_view text, MatrixFormat format);

/// Throws ConfigError for names other than "tsv" and "json".
MatrixFormat parse_matrix_format(std::string_view s);

/// 17 significant digits, the `%.17g` form.
std::string format_full(double v);

namespace fixtures {

/// Personality traits of 20 internship applicants, six columns ending in GotHired.
std::string_view internship_csv();
/// Two columns X1, X2 over 10 rows inducing the same partition.
std::string_view indiscernibles_csv();

Dataset internship();
Dataset indiscernibles();

}  // namespace fixtures

}  // namespace catsu

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

#include "catsu/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "catsu/error.hpp"
#include "unicode.hpp"

namespace catsu {

namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
  bool blank = false;  // a physical line with nothing on it
};

std::vector<Record> split_records(std::string_view text, char delim) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto at_line_end = [&](std::size_t k) { return k < n && (text[k] == '\n' || text[k] == '\r'); };
  auto consume_line_end = [&] {
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
    ++i;
    ++line;
  };

  while (i < n) {
    Record rec;
    rec.line = line;
    rec.blank = at_line_end(i);
    for (;;) {
      std::string field;
      if (i < n && text[i] == '"') {
        const std::size_t open_line = line;
        ++i;
        for (;;) {
          if (i >= n) throw ParseError("unterminated quoted field", open_line);
          const char c = text[i];
          if (c == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n' || (c == '\r' && !(i + 1 < n && text[i + 1] == '\n'))) ++line;
          field += c;
          ++i;
        }
        if (i < n && text[i] != delim && !at_line_end(i)) {
          throw ParseError("unexpected character after closing quote", line);
        }
      } else {
        while (i < n && text[i] != delim && !at_line_end(i)) {
          if (text[i] == '"') throw ParseError("quote inside an unquoted field", line);
          field += text[i++];
        }
      }
      rec.fields.push_back(std::move(field));
      if (i < n && text[i] == delim) {
        ++i;
        continue;
      }
      break;
    }
    if (i < n) consume_line_end();
    records.push_back(std::move(rec));
  }

  while (!records.empty() && records.back().blank) records.pop_back();
  return records;
}

bool needs_quotes(std::string_view s, char delim) {
  if (s.empty()) return true;
  for (char c : s) {
    if (c == delim || c == '"' || c == '\n' || c == '\r') return true;
  }
  return false;
}

void append_csv_field(std::string& out, std::string_view s, char delim) {
  if (!needs_quotes(s, delim)) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

std::string escape_tsv(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_tsv(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    switch (s[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: out += s[i];
    }
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw StructuralError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Dataset parse_csv(std::string_view text, const CsvSpec& spec) {
  std::vector<Record> records = split_records(text, spec.delimiter);
  if (records.empty()) throw EmptyDatasetError("CSV input is empty");

  const Record& header = records.front();
  const std::size_t width = header.fields.size();
  std::vector<std::vector<std::string>> cells(width);
  for (std::size_t r = 1; r < records.size(); ++r) {
    Record& rec = records[r];
    if (rec.fields.size() != width) {
      throw ParseError("data row " + std::to_string(r) + " has " +
                           std::to_string(rec.fields.size()) + " fields, expected " +
                           std::to_string(width),
                       rec.line);
    }
    const bool has_empty = std::any_of(rec.fields.begin(), rec.fields.end(),
                                       [](const std::string& f) { return f.empty(); });
    if (has_empty && spec.na_policy == NaPolicy::drop_row) continue;
    for (std::size_t c = 0; c < width; ++c) {
      std::string& f = rec.fields[c];
      cells[c].push_back(f.empty() ? std::string(kMissingLabel) : std::move(f));
    }
  }
  if (cells.front().empty()) throw EmptyDatasetError("CSV input has no data rows");

  std::vector<CategoricalVariable> columns;
  columns.reserve(width);
  for (std::size_t c = 0; c < width; ++c) {
    columns.emplace_back(detail::to_nfc(header.fields[c]), std::move(cells[c]));
  }
  return Dataset(std::move(columns));
}

Dataset load_csv(std::istream& in, const CsvSpec& spec) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("failed to read CSV input");
  return parse_csv(text, spec);
}

Dataset load_csv(const std::filesystem::path& path, const CsvSpec& spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return load_csv(in, spec);
}

std::string to_csv(const Dataset& d, char delimiter) {
  std::string out;
  for (std::size_t c = 0; c < d.column_count(); ++c) {
    if (c) out += delimiter;
    append_csv_field(out, d.columns()[c].name(), delimiter);
  }
  out += '\n';
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    for (std::size_t c = 0; c < d.column_count(); ++c) {
      if (c) out += delimiter;
      append_csv_field(out, d.columns()[c].label(r), delimiter);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string format_full(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, ptr};
}

MatrixFormat parse_matrix_format(std::string_view s) {
  if (s == "tsv") return MatrixFormat::tsv;
  if (s == "json") return MatrixFormat::json;
  throw ConfigError("unknown matrix format '" + std::string(s) + "'");
}

std::string save_matrix(const NamedMatrix& m, MatrixFormat format) {
  const std::size_t n = m.size();
  std::string out;
  if (format == MatrixFormat::tsv) {
    for (const std::string& name : m.names) {
      out += '\t';
      out += escape_tsv(name);
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out += escape_tsv(m.names[i]);
      for (std::size_t j = 0; j < n; ++j) {
        out += '\t';
        out += format_full(m.at(i, j));
      }
      out += '\n';
    }
    return out;
  }

  out += "{\"names\": [";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += nlohmann::json(m.names[i]).dump();
  }
  out += "], \"values\": [";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ", ";
      const double v = m.at(i, j);
      out += std::isfinite(v) ? format_full(v) : "null";
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

NamedMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  NamedMatrix m;
  if (format == MatrixFormat::json) {
    const nlohmann::json j = nlohmann::json::parse(text);
    m.names = j.at("names").get<std::vector<std::string>>();
    const auto& rows = j.at("values");
    if (rows.size() != m.names.size()) throw StructuralError("matrix is not square");
    for (const auto& row : rows) {
      if (row.size() != m.names.size()) throw StructuralError("matrix is not square");
      for (const auto& v : row) m.values.push_back(v.is_null() ? NAN : v.get<double>());
    }
    return m;
  }

  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw StructuralError("empty matrix text");
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  const auto head = split(lines[0], '\t');
  for (std::size_t k = 1; k < head.size(); ++k) m.names.push_back(unescape_tsv(head[k]));
  const std::size_t n = m.names.size();
  if (lines.size() != n + 1) throw StructuralError("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    const auto cols = split(lines[i + 1], '\t');
    if (cols.size() != n + 1) throw StructuralError("matrix is not square");
    for (std::size_t j = 1; j <= n; ++j) m.values.push_back(parse_double(cols[j]));
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace fixtures {

Dataset internship() { return parse_csv(internship_csv()); }
Dataset indiscernibles() { return parse_csv(indiscernibles_csv()); }

}  // namespace fixtures

}  // namespace catsu

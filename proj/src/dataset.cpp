// Copyright 2026 The corrpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrpoly/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "corrpoly/error.hpp"

namespace corrpoly {
namespace {

struct CsvLine {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

std::string where(std::size_t line, std::string_view field) {
  return "line " + std::to_string(line) + ", field " + std::string(field) + ": ";
}

// RFC 4180 field splitting for one physical line. Quoted fields may hold
// commas and doubled quotes but not line breaks.
std::vector<std::string> split_fields(std::string_view line, std::size_t number) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("line " + std::to_string(number) + ": unterminated quoted field");
  out.push_back(std::move(cur));
  return out;
}

// Splits into non-blank lines and checks the header. Empty text is a valid
// empty table.
std::vector<CsvLine> read_table(std::string_view text, std::string_view header) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<CsvLine> rows;
  std::size_t number = 0;
  bool header_seen = false;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!header_seen) {
      if (line != header) {
        throw ParseError("line " + std::to_string(number) + ": expected header '" +
                         std::string(header) + "', found '" + std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }
    rows.push_back({number, split_fields(line, number)});
  }
  return rows;
}

std::vector<std::string> header_fields(std::string_view header) {
  return split_fields(header, 1);
}

void check_arity(const CsvLine& row, std::size_t expected) {
  if (row.fields.size() != expected) {
    throw ParseError("line " + std::to_string(row.number) + ": expected " +
                     std::to_string(expected) + " fields, found " +
                     std::to_string(row.fields.size()));
  }
}

const std::string& nonempty(const CsvLine& row, std::size_t col, std::string_view name) {
  if (row.fields[col].empty()) throw ParseError(where(row.number, name) + "must not be empty");
  return row.fields[col];
}

Rational weight(const CsvLine& row, std::size_t col, std::string_view name) {
  Rational w;
  try {
    w = Rational::parse(row.fields[col]);
  } catch (const ParseError& e) {
    throw ParseError(where(row.number, name) + e.what());
  }
  if (w.sign() < 0 || w > Rational(1)) {
    throw ParseError(where(row.number, name) + "value " + row.fields[col] +
                     " outside [0,1]");
  }
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view label_code(ExpectedLabel label) {
  return label == ExpectedLabel::Classical ? "c" : "q";
}

const ConceptPair* Dataset::find_pair(std::string_view pair_id) const {
  for (const auto& p : pairs) {
    if (p.pair_id == pair_id) return &p;
  }
  return nullptr;
}

const ItemRecord* Dataset::find_item(std::string_view pair_id, std::string_view item_name) const {
  for (const auto& it : items) {
    if (it.pair_id == pair_id && it.item_name == item_name) return &it;
  }
  return nullptr;
}

std::vector<ItemRecord> Dataset::items_of(std::string_view pair_id) const {
  std::vector<ItemRecord> out;
  for (const auto& it : items) {
    if (it.pair_id == pair_id) out.push_back(it);
  }
  return out;
}

std::vector<ConceptPair> parse_pairs(std::string_view csv_text) {
  static const auto names = header_fields(kPairsHeader);
  std::vector<ConceptPair> out;
  std::set<std::string, std::less<>> ids;
  for (const auto& row : read_table(csv_text, kPairsHeader)) {
    check_arity(row, names.size());
    ConceptPair p{nonempty(row, 0, names[0]), nonempty(row, 1, names[1]),
                  nonempty(row, 2, names[2]), nonempty(row, 3, names[3])};
    if (!ids.insert(p.pair_id).second) {
      throw ParseError(where(row.number, names[0]) + "duplicate pair_id '" + p.pair_id + "'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

Dataset parse_dataset(std::string_view items_csv, std::optional<std::span<const ConceptPair>> pairs) {
  static const auto names = header_fields(kItemsHeader);
  Dataset ds;
  if (pairs) ds.pairs.assign(pairs->begin(), pairs->end());
  std::set<std::pair<std::string, std::string>, std::less<>> keys;
  for (const auto& row : read_table(items_csv, kItemsHeader)) {
    check_arity(row, names.size());
    ItemRecord rec;
    rec.pair_id = nonempty(row, 0, names[0]);
    rec.item_name = nonempty(row, 1, names[1]);
    rec.mu_a1 = weight(row, 2, names[2]);
    rec.mu_a2 = weight(row, 3, names[3]);
    rec.mu_and = weight(row, 4, names[4]);
    const std::string& label = row.fields[5];
    if (label == "c") {
      rec.expected_label = ExpectedLabel::Classical;
    } else if (label == "q") {
      rec.expected_label = ExpectedLabel::Nonclassical;
    } else if (!label.empty()) {
      throw ParseError(where(row.number, names[5]) + "expected 'q', 'c' or empty, found '" +
                       label + "'");
    }
    if (ds.find_pair(rec.pair_id) == nullptr) {
      if (pairs) {
        throw ParseError(where(row.number, names[0]) + "unknown pair_id '" + rec.pair_id + "'");
      }
      ds.pairs.push_back({rec.pair_id, rec.pair_id + " A1", rec.pair_id + " A2",
                          rec.pair_id + " A1 and A2"});
    }
    if (!keys.emplace(rec.pair_id, rec.item_name).second) {
      throw ParseError(where(row.number, names[1]) + "duplicate item '" + rec.item_name +
                       "' for pair '" + rec.pair_id + "'");
    }
    ds.items.push_back(std::move(rec));
  }
  return ds;
}

Dataset load_dataset(const std::string& items_path, const std::string& pairs_path) {
  std::string items_text = read_file(items_path);
  std::optional<std::vector<ConceptPair>> pairs;
  if (!pairs_path.empty()) {
    try {
      pairs = parse_pairs(read_file(pairs_path));
    } catch (const ParseError& e) {
      throw ParseError(pairs_path + ": " + e.what());
    }
  }
  try {
    if (!pairs) return parse_dataset(items_text);
    return parse_dataset(items_text, std::span<const ConceptPair>(*pairs));
  } catch (const ParseError& e) {
    throw ParseError(items_path + ": " + e.what());
  }
}

std::string pairs_to_csv(std::span<const ConceptPair> pairs) {
  std::string out(kPairsHeader);
  out += '\n';
  for (const auto& p : pairs) {
    out += csv_field(p.pair_id) + ',' + csv_field(p.name_a1) + ',' + csv_field(p.name_a2) + ',' +
           csv_field(p.name_conjunction) + '\n';
  }
  return out;
}

std::string items_to_csv(std::span<const ItemRecord> items) {
  std::string out(kItemsHeader);
  out += '\n';
  for (const auto& it : items) {
    out += csv_field(it.pair_id) + ',' + csv_field(it.item_name) + ',' +
           it.mu_a1.to_exact_decimal() + ',' + it.mu_a2.to_exact_decimal() + ',' +
           it.mu_and.to_exact_decimal() + ',' +
           (it.expected_label ? std::string(label_code(*it.expected_label)) : std::string()) +
           '\n';
  }
  return out;
}

const Dataset& bundled_hampton_dataset() {
  static const Dataset ds = [] {
    auto pairs = parse_pairs(bundled_pairs_csv());
    return parse_dataset(bundled_items_csv(), std::span<const ConceptPair>(pairs));
  }();
  return ds;
}

}  // namespace corrpoly

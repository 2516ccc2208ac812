#pragma once

#include "hodge/cyclic.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

struct ResultRow {
  int p = 0;
  int degree = 0;
  std::size_t dim = 0;
  bool safe = false;
  std::map<int, std::size_t> by_weight;
  std::vector<std::string> representatives;
  bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
  std::string command;
  std::string input;       // fixture name
  std::string input_hash;  // of the input file text
  std::string route;
  Truncation truncation;
  std::string generated;   // optional timestamp, not part of the hash
  std::vector<ResultRow> rows;
  std::vector<std::pair<std::string, std::string>> notes;
  bool operator==(const ResultTable& o) const;
};

enum class Format { json, csv, text };
Format parse_format(const std::string& s);  // throws std::invalid_argument

// "fnv1a64:" followed by 16 hex digits.
std::string input_hash(const std::string& text);
ResultRow row_from(const HomologyRow& r);

// JSON: {"metadata": {...}, "rows": [...], "notes": {...}}; CSV columns p,degree,dim,safe.
std::string emit(const ResultTable& t, Format f);
ResultTable parse_table_json(const std::string& json);

}  // namespace hodge

#include "hodge/emit.hpp"

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hodge {

using ojson = nlohmann::ordered_json;

bool ResultTable::operator==(const ResultTable& o) const
{
  return command == o.command && input == o.input && input_hash == o.input_hash && route == o.route &&
         truncation.max_weight == o.truncation.max_weight && truncation.max_degree == o.truncation.max_degree &&
         generated == o.generated && rows == o.rows && notes == o.notes;
}

Format parse_format(const std::string& s)
{
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, text)");
}

std::string input_hash(const std::string& text)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ResultRow row_from(const HomologyRow& r)
{
  ResultRow out;
  out.p = r.p;
  out.degree = r.degree;
  out.dim = r.dim;
  out.safe = r.safe;
  out.by_weight = r.by_weight;
  return out;
}

namespace {

ojson to_json(const ResultTable& t)
{
  ojson meta;
  meta["command"] = t.command;
  meta["input"] = t.input;
  meta["input_hash"] = t.input_hash;
  meta["route"] = t.route;
  meta["truncation"] = {{"max_weight", t.truncation.max_weight}, {"max_degree", t.truncation.max_degree}};
  if (!t.generated.empty()) meta["generated"] = t.generated;
  ojson rows = ojson::array();
  for (const auto& r : t.rows) {
    ojson j;
    j["p"] = r.p;
    j["degree"] = r.degree;
    j["dim"] = r.dim;
    j["safe"] = r.safe;
    if (!r.by_weight.empty()) {
      ojson w = ojson::object();
      for (const auto& [k, v] : r.by_weight) w[std::to_string(k)] = v;
      j["by_weight"] = w;
    }
    if (!r.representatives.empty()) j["representatives"] = r.representatives;
    rows.push_back(j);
  }
  ojson notes = ojson::array();
  for (const auto& [k, v] : t.notes) notes.push_back({{"key", k}, {"value", v}});
  return ojson{{"metadata", meta}, {"rows", rows}, {"notes", notes}};
}

}  // namespace

std::string emit(const ResultTable& t, Format f)
{
  std::ostringstream os;
  switch (f) {
    case Format::json:
      os << to_json(t).dump(2) << "\n";
      break;
    case Format::csv:
      os << "p,degree,dim,safe\n";
      for (const auto& r : t.rows) os << r.p << "," << r.degree << "," << r.dim << "," << (r.safe ? "true" : "false") << "\n";
      break;
    case Format::text: {
      os << t.command << " on " << t.input << " (route " << t.route << ", max weight " << t.truncation.max_weight
         << ", max degree " << t.truncation.max_degree << ")\n";
      if (!t.rows.empty()) {
        os << std::setw(4) << "p" << std::setw(8) << "degree" << std::setw(8) << "dim" << "  safe  by weight\n";
        for (const auto& r : t.rows) {
          os << std::setw(4) << r.p << std::setw(8) << r.degree << std::setw(8) << r.dim << "  " << (r.safe ? "yes " : "no  ");
          std::string sep = "  ";
          for (const auto& [w, d] : r.by_weight) {
            os << sep << w << ":" << d;
            sep = " ";
          }
          os << "\n";
          for (const auto& rep : r.representatives) os << "        " << rep << "\n";
        }
      }
      std::size_t width = 0;
      for (const auto& [k, v] : t.notes) width = std::max(width, k.size());
      for (const auto& [k, v] : t.notes) os << std::left << std::setw(static_cast<int>(width)) << k << std::right << "  " << v << "\n";
      break;
    }
  }
  return os.str();
}

ResultTable parse_table_json(const std::string& text)
{
  ojson j = ojson::parse(text);
  ResultTable t;
  const auto& m = j.at("metadata");
  t.command = m.at("command").get<std::string>();
  t.input = m.at("input").get<std::string>();
  t.input_hash = m.at("input_hash").get<std::string>();
  t.route = m.at("route").get<std::string>();
  t.truncation.max_weight = m.at("truncation").at("max_weight").get<int>();
  t.truncation.max_degree = m.at("truncation").at("max_degree").get<int>();
  if (m.contains("generated")) t.generated = m.at("generated").get<std::string>();
  for (const auto& r : j.at("rows")) {
    ResultRow row;
    row.p = r.at("p").get<int>();
    row.degree = r.at("degree").get<int>();
    row.dim = r.at("dim").get<std::size_t>();
    row.safe = r.at("safe").get<bool>();
    if (r.contains("by_weight"))
      for (const auto& [k, v] : r.at("by_weight").items()) row.by_weight[std::stoi(k)] = v.get<std::size_t>();
    if (r.contains("representatives")) row.representatives = r.at("representatives").get<std::vector<std::string>>();
    t.rows.push_back(std::move(row));
  }
  for (const auto& n : j.at("notes")) t.notes.emplace_back(n.at("key").get<std::string>(), n.at("value").get<std::string>());
  return t;
}

}  // namespace hodge

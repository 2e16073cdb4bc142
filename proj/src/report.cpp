#include "fracqm/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"

namespace fracqm::report {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return rounded(v);
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_number(v));
}

std::string to_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(to_text(row[i]));
    os << '\n';
  }
}

void write_meta_comments(std::ostream& os, const Table& t) {
  for (const auto& [key, value] : t.meta) os << "# " << key << ": " << to_text(value) << '\n';
}

void write_json(std::ostream& os, const Table& t) {
  ordered_json doc;
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : t.meta) meta[key] = to_json(value);
  doc["meta"] = meta;
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) r[t.columns[i]] = to_json(row[i]);
    rows.push_back(r);
  }
  doc["rows"] = rows;
  os << doc.dump(2) << '\n';
}

}  // namespace fracqm::report

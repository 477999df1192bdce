#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace hardy::cli {
namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("refusing to serialize a non-finite number");
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buffer, end);
}

void write_csv(const OutputRecord& record, std::ostream& out) {
  out << "# schema: " << record.schema << '\n';
  out << "# command: " << record.command << '\n';
  if (record.seed) out << "# seed: " << *record.seed << '\n';
  for (const auto& [name, tol] : record.tolerances) out << "# tolerance " << name << ": " << format_double(tol) << '\n';
  for (std::size_t i = 0; i < record.table.columns.size(); ++i) {
    if (i) out << ',';
    out << record.table.columns[i];
  }
  out << '\n';
  for (const auto& row : record.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_cell(row[i]);
    }
    out << '\n';
  }
}

void write_json(const OutputRecord& record, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = record.schema;
  doc["command"] = record.command;
  doc["seed"] = record.seed ? nlohmann::ordered_json(*record.seed) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  for (const auto& [name, tol] : record.tolerances) tolerances[name] = tol;
  doc["tolerances"] = std::move(tolerances);

  nlohmann::ordered_json payload;
  payload["columns"] = record.table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : record.table.rows) {
    nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
    for (const Cell& cell : row) json_row.push_back(json_cell(cell));
    rows.push_back(std::move(json_row));
  }
  payload["rows"] = std::move(rows);
  if (!record.extra.is_null()) {
    for (const auto& [key, value] : record.extra.items()) payload[key] = value;
  }
  doc["payload"] = std::move(payload);
  out << doc.dump(2) << '\n';
}

}  // namespace hardy::cli

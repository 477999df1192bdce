#pragma once

// Structured command output. Every command produces one OutputRecord holding
// a single table; CSV and JSON are two renderings of the same record.
//
// CSV: '#'-prefixed metadata lines (schema, command, seed, tolerances), then
// a header row and comma-separated rows. Doubles are written with 17
// significant digits via std::to_chars, so the output is locale independent.
//
// JSON: {"schema", "command", "seed", "tolerances", "payload": {"columns",
// "rows", ...}}. Missing cells are empty in CSV and null in JSON.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hardy::cli {

inline constexpr const char* kSchemaVersion = "hardy-weight/1";

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct OutputRecord {
  std::string schema = kSchemaVersion;
  std::string command;
  std::optional<std::uint64_t> seed;
  /// Ordered name -> tolerance pairs.
  std::vector<std::pair<std::string, double>> tolerances;
  Table table;
  /// Additional structured payload (JSON only), e.g. the full verification report.
  nlohmann::ordered_json extra;
};

std::string format_double(double value);

void write_csv(const OutputRecord& record, std::ostream& out);
void write_json(const OutputRecord& record, std::ostream& out);

}  // namespace hardy::cli

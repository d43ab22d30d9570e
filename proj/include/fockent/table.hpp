#pragma once

#include "json.hpp"

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace fockent {

using Cell = std::variant<long long, double, std::string, bool>;

/// Column-named rows, written as CSV or as a JSON {columns, rows} object.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// "%.17g"; non-finite values as "nan", "inf", "-inf".
std::string format_double(double value);

/// Header row plus one line per row, comma-separated, LF endings.
void write_csv(std::ostream& out, const Table& table);

nlohmann::json to_json(const Table& table);

}  // namespace fockent

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turankit::cli {

/// Rows of string cells under fixed column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Throws std::logic_error when the row width is wrong.
  void add(std::vector<std::string> row);
};

/// RFC 4180 quoting for cells containing ',', '"' or a newline.
void write_csv(const Table& table, std::ostream& out);
/// Array of objects keyed by column name, in column order.
void write_json(const Table& table, std::ostream& out);

}  // namespace turankit::cli

#include "turankit/cli/table.hpp"

#include <json.hpp>

#include <stdexcept>

namespace turankit::cli {

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row has the wrong number of cells");
  rows.push_back(std::move(row));
}

namespace {

void csv_cell(const std::string& cell, std::ostream& out) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    csv_cell(cells[i], out);
  }
  out << '\n';
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  csv_line(table.columns, out);
  for (const auto& row : table.rows) csv_line(row, out);
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace turankit::cli

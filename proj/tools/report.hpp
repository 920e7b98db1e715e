#pragma once

#include <string>
#include <vector>

namespace torus2::cli {

enum class Format { plain, csv, json };

// A rectangular report. Cells are stored as text; a cell is emitted as a
// JSON number when it is an integer literal, as a JSON bool for
// "true"/"false", as null when empty, and as a string otherwise.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string render(const Table& table, Format format);

}  // namespace torus2::cli

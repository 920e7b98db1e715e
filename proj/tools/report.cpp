#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace torus2::cli {

namespace {

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  const std::size_t start = s[0] == '-' ? 1 : 0;
  return start < s.size() && std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json json_cell(const std::string& s) {
  if (s.empty()) return nullptr;
  if (s == "true") return true;
  if (s == "false") return false;
  // Integers too wide for a 64-bit JSON number keep their digits as a string.
  if (is_integer(s) && s.size() <= 18) return std::stoll(s);
  return s;
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string render(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::plain: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
        for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c != 0) text += "  ";
          text += cells[c];
          if (c + 1 != cells.size()) text.append(width[c] - cells[c].size(), ' ');
        }
        out << text << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case Format::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_escape(cells[c]);
        out << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case Format::json: {
      auto array = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c]);
        array.push_back(std::move(obj));
      }
      out << array.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace torus2::cli

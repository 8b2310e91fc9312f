#include "hallmhd/series_csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hallmhd/errors.hpp"

namespace hallmhd {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_series_csv(const SeriesTable& table, const std::filesystem::path& path) {
  std::string text;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) text += ',';
    text += table.columns[j];
  }
  text += '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() != table.columns.size()) {
      throw InvalidArgument("series row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                            " values for " + std::to_string(table.columns.size()) + " columns");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) text += ',';
      text += format_double(row[j]);
    }
    text += '\n';
  }

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SeriesTable read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open series " + path.string());
  SeriesTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + ": empty file, expected a header row");
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) table.columns.push_back(name);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw IoError(path.string() + ":" + std::to_string(lineno) + ": cannot parse '" + cell + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.columns.size()) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(table.columns.size()) + " values, got " + std::to_string(row.size()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace hallmhd

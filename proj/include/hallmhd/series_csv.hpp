#pragma once

#include <filesystem>
#include <string>

#include "hallmhd/diagnostics.hpp"

namespace hallmhd {

/// Format with 17 significant digits, enough to reproduce any double.
std::string format_double(double value);

/// Header row of column names, then one comma-separated line per row.
/// Throws InvalidArgument when a row width differs from the header and
/// IoError (naming the path) when the file cannot be written.
void write_series_csv(const SeriesTable& table, const std::filesystem::path& path);

/// Parse a file written by write_series_csv; values are recovered exactly.
SeriesTable read_series_csv(const std::filesystem::path& path);

}  // namespace hallmhd

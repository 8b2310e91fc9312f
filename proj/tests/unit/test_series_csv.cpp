#include "hallmhd/series_csv.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"
#include "hallmhd/errors.hpp"

namespace hallmhd {
namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hallmhd_csv_" + name);
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SeriesCsv, EmptySeriesIsHeaderOnly) {
  SeriesTable t;
  t.columns = {"t", "B_L2"};
  const auto p = temp_path("empty.csv");
  write_series_csv(t, p);
  EXPECT_EQ(read_text(p), "t,B_L2\n");
  EXPECT_TRUE(read_series_csv(p).rows.empty());
  std::filesystem::remove(p);
}

TEST(SeriesCsv, TwoSamplesMakeThreeLines) {
  SeriesTable t;
  t.columns = {"t", "x"};
  t.rows = {{0.0, 1.0}, {0.5, 0.25}};
  const auto p = temp_path("two.csv");
  write_series_csv(t, p);
  EXPECT_EQ(read_text(p), "t,x\n0,1\n0.5,0.25\n");
  std::filesystem::remove(p);
}

TEST(SeriesCsv, RoundTripIsExact) {
  SeriesTable t;
  t.columns = {"t", "a", "b"};
  t.rows = {{0.1, 1.0 / 3.0, -2.5e-300},
            {std::numeric_limits<double>::min(), std::numeric_limits<double>::max(), 6.02214076e23},
            {12.0, 0.0, -0.0}};
  const auto p = temp_path("round.csv");
  write_series_csv(t, p);
  const SeriesTable r = read_series_csv(p);
  std::filesystem::remove(p);
  EXPECT_EQ(r.columns, t.columns);
  ASSERT_EQ(r.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(r.rows[i], t.rows[i]);
}

TEST(SeriesCsv, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 7.0, 1e-17, 123456789.123456789}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(SeriesCsv, Errors) {
  SeriesTable t;
  t.columns = {"t", "x"};
  t.rows = {{0.0}};
  EXPECT_THROW(write_series_csv(t, temp_path("bad.csv")), InvalidArgument);
  t.rows = {{0.0, 1.0}};
  EXPECT_THROW(write_series_csv(t, "/nonexistent/dir/series.csv"), IoError);
  EXPECT_THROW(read_series_csv("/nonexistent/dir/series.csv"), IoError);

  const auto p = temp_path("garbage.csv");
  std::ofstream(p) << "t,x\n0,abc\n";
  EXPECT_THROW(read_series_csv(p), IoError);
  std::ofstream(p) << "t,x\n0,1,2\n";
  EXPECT_THROW(read_series_csv(p), IoError);
  std::filesystem::remove(p);
}

TEST(SeriesTable, ColumnLookup) {
  SeriesTable t;
  t.columns = {"t", "x"};
  t.rows = {{0.0, 3.0}, {1.0, 4.0}};
  EXPECT_EQ(t.column("x"), 1u);
  EXPECT_THROW(t.column("y"), InvalidArgument);
  const DecaySeries s = t.series("x");
  EXPECT_EQ(s.times, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(s.values, (std::vector<double>{3.0, 4.0}));
}

}  // namespace
}  // namespace hallmhd

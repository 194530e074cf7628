#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "fattail/chaos.hpp"
#include "fattail/fit.hpp"
#include "fattail/series.hpp"
#include "fattail/spatial.hpp"
#include "fattail/stats.hpp"

namespace fattail {

/// Which column of a delimited text file to read. A column given by name
/// implies the first non-blank line is a header.
struct ColumnSelector {
  std::filesystem::path path;
  std::variant<std::size_t, std::string> column = std::size_t{0};
  char delimiter = ',';
  bool skip_header = false;
};

/// Reads one column in file order. Blank lines are skipped; any other
/// unparseable or missing cell is an error naming the 1-based line.
Series read_series(const ColumnSelector& sel);

/// Whitespace-delimited numeric matrix with an optional first line
/// "nodata <value>". Rows must all have the same length.
Raster read_raster(const std::filesystem::path& path);

/// Locale-independent rendering with 17
/// significant digits. Non-finite values render as "nan"/"inf"/"-inf".
std::string format_number(double value);

/// Flat key/value fit report, in the order the keys are written.
struct Report {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double mean_over_std = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double nu = 0.0;
  double location = 0.0;
  double scale = 0.0;
  double log_likelihood = 0.0;
  double pp_correlation = 0.0;
  double tail_excess_3sigma = 0.0;
  std::string diff_method;
  int diff_order = 0;
  int k_window = 0;
  bool normal_limit_flag = false;
};

Report make_report(const TFit& fit, const EmpiricalDist& dist);

/// JSON object with exactly the Report keys. Numbers carry 17
/// significant digits, so reading the file back reproduces every value.
std::string render_report(const Report& report);
void write_report(const TFit& fit, const EmpiricalDist& dist,
                  const std::filesystem::path& path);
Report parse_report(std::string_view json);
Report read_report(const std::filesystem::path& path);

/// Maximum number of data rows in an overlay file.
inline constexpr std::size_t kMaxOverlayRows = 10'000;

/// CSV with header "x_normalized,ecdf,t_cdf_fitted,normal_cdf", one row per
/// order statistic, thinned to kMaxOverlayRows evenly spaced order
/// statistics for larger samples.
void write_overlay(const EmpiricalDist& dist, const TFit& fit,
                   const std::filesystem::path& path);

/// CSV with header "t,x,y,z".
void write_trajectory(const Trajectory& traj, const std::filesystem::path& path);
void write_trajectory(const Trajectory& traj, std::ostream& out);

}  // namespace fattail

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fattail/series.hpp"

namespace fattail {

/// Row-major grid of samples. Cells equal to the nodata sentinel are
/// missing; a NaN sentinel matches NaN cells.
class Raster {
 public:
  /// Throws Error(Module::spatial) if cells.size() != rows * cols, a
  /// dimension is zero, or a non-sentinel cell is not finite.
  Raster(std::size_t rows, std::size_t cols, std::vector<double> cells,
         std::optional<double> nodata = std::nullopt);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> cells() const noexcept { return cells_; }
  const std::optional<double>& nodata() const noexcept { return nodata_; }

  double at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  bool is_nodata(std::size_t r, std::size_t c) const;

  Raster transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::optional<double> nodata_;
};

/// axis::col differences neighbours within a row (west-east),
/// axis::row differences neighbours within a column (north-south).
enum class Axis { row, col };

std::string_view to_string(Axis a) noexcept;
Axis parse_axis(std::string_view text);

/// Adjacent-cell differences (next - current) along `axis`, pooled
/// row-major into one Series. Pairs touching a nodata cell are skipped.
/// Throws "axis too short" or "all pairs skipped".
Series spatial_diff(const Raster& r, Axis axis);

}  // namespace fattail

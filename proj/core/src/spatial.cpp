#include "fattail/spatial.hpp"

#include <cmath>
#include <string>

#include "fattail/error.hpp"

namespace fattail {

Raster::Raster(std::size_t rows, std::size_t cols, std::vector<double> cells,
               std::optional<double> nodata)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), nodata_(nodata) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Module::spatial, "raster must have at least one row and column");
  }
  if (cells_.size() != rows_ * cols_) {
    throw Error(Module::spatial, "raster has " + std::to_string(cells_.size()) +
                                     " cells, expected " +
                                     std::to_string(rows_ * cols_));
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_nodata(r, c) && !std::isfinite(at(r, c))) {
        throw Error(Module::spatial, "non-finite cell at (" + std::to_string(r) +
                                         ", " + std::to_string(c) + ")");
      }
    }
  }
}

bool Raster::is_nodata(std::size_t r, std::size_t c) const {
  if (!nodata_) return false;
  const double v = at(r, c);
  return std::isnan(*nodata_) ? std::isnan(v) : v == *nodata_;
}

Raster Raster::transposed() const {
  std::vector<double> out(cells_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[c * rows_ + r] = at(r, c);
  }
  return Raster(cols_, rows_, std::move(out), nodata_);
}

std::string_view to_string(Axis a) noexcept {
  return a == Axis::row ? "row" : "col";
}

Axis parse_axis(std::string_view text) {
  if (text == "row") return Axis::row;
  if (text == "col") return Axis::col;
  throw Error(Module::spatial, "unknown axis '" + std::string(text) + "'");
}

Series spatial_diff(const Raster& r, Axis axis) {
  const std::size_t dr = axis == Axis::row ? 1 : 0;
  const std::size_t dc = axis == Axis::col ? 1 : 0;
  if ((axis == Axis::row ? r.rows() : r.cols()) < 2) {
    throw Error(Module::spatial, "axis too short");
  }
  std::vector<double> out;
  out.reserve(r.rows() * r.cols());
  for (std::size_t i = 0; i + dr < r.rows(); ++i) {
    for (std::size_t j = 0; j + dc < r.cols(); ++j) {
      if (r.is_nodata(i, j) || r.is_nodata(i + dr, j + dc)) continue;
      out.push_back(r.at(i + dr, j + dc) - r.at(i, j));
    }
  }
  if (out.empty()) throw Error(Module::spatial, "all pairs skipped");
  return Series(std::move(out), std::nullopt,
                "spatial_diff[" + std::string(to_string(axis)) + "]");
}

}  // namespace fattail

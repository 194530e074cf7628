#pragma once

#include <cstddef>
#include <optional>

#include "fattail/fit.hpp"
#include "fattail/series.hpp"
#include "fattail/stats.hpp"

namespace fattail {

/// Everything one analysis run produces.
struct Analysis {
  Series differences;
  EmpiricalDist dist;
  TFit fit;
};

/// Difference the series, summarize the result and fit a t distribution.
Analysis analyze_series(const Series& s, const DiffSpec& spec,
                        std::optional<std::size_t> bins = std::nullopt);

/// Summarize and fit an already-differenced series. `spec` is recorded in
/// the fit for provenance only.
Analysis analyze_differences(Series differences,
                             std::optional<DiffSpec> spec = std::nullopt,
                             std::optional<std::size_t> bins = std::nullopt);

}  // namespace fattail

#include "fattail/pipeline.hpp"

#include "fattail/diff.hpp"

namespace fattail {

Analysis analyze_series(const Series& s, const DiffSpec& spec,
                        std::optional<std::size_t> bins) {
  return analyze_differences(diff_n(s, spec), spec, bins);
}

Analysis analyze_differences(Series differences, std::optional<DiffSpec> spec,
                             std::optional<std::size_t> bins) {
  Analysis a;
  a.differences = std::move(differences);
  a.dist = summarize(a.differences, bins);
  a.fit = fit_t_mle(a.differences);
  a.fit.diff_spec = spec;
  return a;
}

}  // namespace fattail

#include "fattail/series.hpp"

#include <cmath>

#include "fattail/error.hpp"

namespace fattail {

Series::Series(std::vector<double> values, std::optional<double> dt,
               std::string label)
    : values_(std::move(values)), dt_(dt), label_(std::move(label)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(Module::diffcore,
                  "non-finite sample at index " + std::to_string(i));
    }
  }
  if (dt_ && !(std::isfinite(*dt_) && *dt_ > 0.0)) {
    throw Error(Module::diffcore, "sampling step must be positive");
  }
}

std::string_view to_string(DiffMethod m) noexcept {
  switch (m) {
    case DiffMethod::plain: return "plain";
    case DiffMethod::ratio: return "ratio";
    case DiffMethod::log: return "log";
  }
  return "unknown";
}

DiffMethod parse_diff_method(std::string_view text) {
  if (text == "plain") return DiffMethod::plain;
  if (text == "ratio") return DiffMethod::ratio;
  if (text == "log") return DiffMethod::log;
  throw Error(Module::diffcore,
              "unknown difference method '" + std::string(text) + "'");
}

}  // namespace fattail

#include "fattail/diff.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fattail/error.hpp"

namespace fattail {
namespace {

constexpr double kWindowMeanTolerance = 1e-12;

[[noreturn]] void too_short() {
  throw Error(Module::diffcore, "series too short");
}

std::string wrap_label(std::string_view op, const std::string& label) {
  return std::string(op) + "(" + label + ")";
}

}  // namespace

Series diff_plain(const Series& s) {
  if (s.size() < 2) too_short();
  const auto v = s.values();
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out[i] = v[i + 1] - v[i];
  return Series(std::move(out), s.dt(), wrap_label("diff", s.label()));
}

Series diff_ratio(const Series& s, int k) {
  if (k < 1) throw Error(Module::diffcore, "k_window must be >= 1");
  const auto window = static_cast<std::size_t>(k);
  const std::size_t first = std::max<std::size_t>(1, window - 1);
  if (s.size() < std::max<std::size_t>(2, window)) too_short();

  const auto v = s.values();
  std::vector<double> out;
  out.reserve(v.size() - first);
  for (std::size_t i = first; i < v.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = i + 1 - window; j <= i; ++j) sum += v[j];
    const double mean = sum / static_cast<double>(window);
    if (std::abs(mean) <= kWindowMeanTolerance) {
      throw Error(Module::diffcore,
                  "degenerate window mean at index " + std::to_string(i));
    }
    out.push_back((v[i] - v[i - 1]) / mean);
  }
  return Series(std::move(out), s.dt(),
                wrap_label("ratio_diff[k=" + std::to_string(k) + "]",
                           s.label()));
}

Series diff_log(const Series& s) {
  if (s.size() < 2) too_short();
  const auto v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) {
      throw Error(Module::diffcore,
                  "log difference requires positive samples (index " +
                      std::to_string(i) + ")");
    }
  }
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    out[i] = std::log(v[i + 1]) - std::log(v[i]);
  }
  return Series(std::move(out), s.dt(), wrap_label("log_diff", s.label()));
}

Series diff_n(const Series& s, const DiffSpec& spec) {
  if (spec.order < 1) throw Error(Module::diffcore, "order must be >= 1");
  if (spec.k_window < 1) throw Error(Module::diffcore, "k_window must be >= 1");

  Series out = [&] {
    switch (spec.method) {
      case DiffMethod::ratio: return diff_ratio(s, spec.k_window);
      case DiffMethod::log: return diff_log(s);
      case DiffMethod::plain: break;
    }
    return diff_plain(s);
  }();
  for (int i = 1; i < spec.order; ++i) out = diff_plain(out);
  return out;
}

}  // namespace fattail

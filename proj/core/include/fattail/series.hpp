#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fattail {

/// An ordered sequence of finite real samples with an optional uniform
/// sampling step. Immutable once constructed.
class Series {
 public:
  Series() = default;

  /// Throws Error if any value is NaN/inf or dt is present and not > 0.
  explicit Series(std::vector<double> values,
                  std::optional<double> dt = std::nullopt,
                  std::string label = {});

  std::span<const double> values() const noexcept { return values_; }
  const std::optional<double>& dt() const noexcept { return dt_; }
  const std::string& label() const noexcept { return label_; }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::vector<double> values_;
  std::optional<double> dt_;
  std::string label_;
};

enum class DiffMethod { plain, ratio, log };

std::string_view to_string(DiffMethod m) noexcept;

/// Parses "plain" | "ratio" | "log"; throws Error otherwise.
DiffMethod parse_diff_method(std::string_view text);

/// Selects a difference operator and how many times to apply it.
/// k_window only matters for DiffMethod::ratio.
struct DiffSpec {
  DiffMethod method = DiffMethod::plain;
  int order = 1;
  int k_window = 5;

  bool operator==(const DiffSpec&) const = default;
};

}  // namespace fattail

#include "fattail/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "fattail/distributions.hpp"
#include "fattail/error.hpp"

namespace fattail {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Module::ingest, "cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Module::ingest, "cannot open '" + path.string() + "' for writing");
  }
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(Module::ingest, "write failed for '" + path.string() + "'");
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  return std::string(buf, ptr);
}

Series read_series(const ColumnSelector& sel) {
  auto in = open_input(sel.path);
  const bool by_name = std::holds_alternative<std::string>(sel.column);
  bool header_pending = sel.skip_header || by_name;
  std::optional<std::size_t> index;
  if (!by_name) index = std::get<std::size_t>(sel.column);

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, sel.delimiter);
    if (header_pending) {
      header_pending = false;
      if (by_name) {
        const auto& name = std::get<std::string>(sel.column);
        const auto it = std::find(fields.begin(), fields.end(), name);
        if (it == fields.end()) {
          throw Error(Module::ingest, "missing column '" + name + "'");
        }
        index = static_cast<std::size_t>(it - fields.begin());
      }
      continue;
    }
    if (*index >= fields.size()) {
      throw Error(Module::ingest,
                  line_error(line_no, "missing column " + std::to_string(*index)));
    }
    const auto value = parse_double(fields[*index]);
    if (!value || !std::isfinite(*value)) {
      throw Error(Module::ingest,
                  line_error(line_no, "cannot parse '" +
                                          std::string(fields[*index]) + "'"));
    }
    values.push_back(*value);
  }
  if (values.size() < 2) {
    throw Error(Module::ingest, "need at least 2 values, found " +
                                    std::to_string(values.size()));
  }
  return Series(std::move(values), std::nullopt, sel.path.filename().string());
}

Raster read_raster(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::optional<double> nodata;
  std::vector<double> cells;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool first = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (first && tokens.front() == "nodata") {
      first = false;
      if (tokens.size() != 2) {
        throw Error(Module::ingest, line_error(line_no, "expected 'nodata <value>'"));
      }
      nodata = parse_double(tokens[1]);
      if (!nodata) {
        throw Error(Module::ingest, line_error(line_no, "cannot parse nodata value"));
      }
      continue;
    }
    first = false;
    if (rows == 0) {
      cols = tokens.size();
    } else if (tokens.size() != cols) {
      throw Error(Module::ingest,
                  line_error(line_no, "ragged rows: " + std::to_string(tokens.size()) +
                                          " values, expected " + std::to_string(cols)));
    }
    for (const auto token : tokens) {
      const auto value = parse_double(token);
      if (!value) {
        throw Error(Module::ingest,
                    line_error(line_no, "cannot parse '" + std::string(token) + "'"));
      }
      cells.push_back(*value);
    }
    ++rows;
  }
  if (rows == 0) throw Error(Module::ingest, "empty raster '" + path.string() + "'");
  return Raster(rows, cols, std::move(cells), nodata);
}

Report make_report(const TFit& fit, const EmpiricalDist& dist) {
  Report r;
  r.n = dist.n;
  r.mean = dist.mean;
  r.stddev = dist.stddev;
  r.mean_over_std = fit.mean_over_std;
  r.skewness = dist.skewness;
  r.excess_kurtosis = dist.excess_kurtosis;
  r.nu = fit.nu;
  r.location = fit.location;
  r.scale = fit.scale;
  r.log_likelihood = fit.log_likelihood;
  r.pp_correlation = fit.correlation;
  r.tail_excess_3sigma = tail_excess(dist, 3.0);
  if (fit.diff_spec) {
    r.diff_method = std::string(to_string(fit.diff_spec->method));
    r.diff_order = fit.diff_spec->order;
    r.k_window = fit.diff_spec->k_window;
  } else {
    r.diff_method = "none";
  }
  r.normal_limit_flag = fit.normal_limit;
  return r;
}

std::string render_report(const Report& r) {
  std::ostringstream out;
  bool first = true;
  const auto key = [&](std::string_view k) {
    out << (first ? "{\n" : ",\n") << "  \"" << k << "\": ";
    first = false;
  };
  const auto number = [&](std::string_view k, double v) {
    key(k);
    if (std::isfinite(v)) {
      out << format_number(v);
    } else {
      out << "null";
    }
  };
  key("n");
  out << r.n;
  number("mean", r.mean);
  number("std", r.stddev);
  number("mean_over_std", r.mean_over_std);
  number("skewness", r.skewness);
  number("excess_kurtosis", r.excess_kurtosis);
  number("nu", r.nu);
  number("location", r.location);
  number("scale", r.scale);
  number("log_likelihood", r.log_likelihood);
  number("pp_correlation", r.pp_correlation);
  number("tail_excess_3sigma", r.tail_excess_3sigma);
  key("diff_method");
  out << nlohmann::json(r.diff_method).dump();
  key("diff_order");
  out << r.diff_order;
  key("k_window");
  out << r.k_window;
  key("normal_limit_flag");
  out << (r.normal_limit_flag ? "true" : "false");
  out << "\n}\n";
  return out.str();
}

void write_report(const TFit& fit, const EmpiricalDist& dist,
                  const std::filesystem::path& path) {
  const std::string text = render_report(make_report(fit, dist));
  auto out = open_output(path);
  out << text;
  finish(out, path);
}

Report parse_report(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    const auto num = [&](const char* k) {
      const auto& v = j.at(k);
      return v.is_null() ? std::nan("") : v.get<double>();
    };
    Report r;
    r.n = j.at("n").get<std::size_t>();
    r.mean = num("mean");
    r.stddev = num("std");
    r.mean_over_std = num("mean_over_std");
    r.skewness = num("skewness");
    r.excess_kurtosis = num("excess_kurtosis");
    r.nu = num("nu");
    r.location = num("location");
    r.scale = num("scale");
    r.log_likelihood = num("log_likelihood");
    r.pp_correlation = num("pp_correlation");
    r.tail_excess_3sigma = num("tail_excess_3sigma");
    r.diff_method = j.at("diff_method").get<std::string>();
    r.diff_order = j.at("diff_order").get<int>();
    r.k_window = j.at("k_window").get<int>();
    r.normal_limit_flag = j.at("normal_limit_flag").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Module::ingest, std::string("malformed report: ") + e.what());
  }
}

Report read_report(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_report(buf.str());
}

void write_overlay(const EmpiricalDist& dist, const TFit& fit,
                   const std::filesystem::path& path) {
  if (dist.n == 0 || !(dist.stddev > 0.0)) {
    throw Error(Module::ingest, "overlay requires a non-degenerate distribution");
  }
  const std::size_t rows = std::min(dist.n, kMaxOverlayRows);
  auto out = open_output(path);
  out << "x_normalized,ecdf,t_cdf_fitted,normal_cdf\n";
  for (std::size_t j = 0; j < rows; ++j) {
    const std::size_t i =
        rows == dist.n
            ? j
            : static_cast<std::size_t>(std::llround(
                  static_cast<double>(j) * static_cast<double>(dist.n - 1) /
                  static_cast<double>(rows - 1)));
    const double x = dist.sorted_samples[i];
    const double z = (x - dist.mean) / dist.stddev;
    out << format_number(z) << ',' << format_number(dist.ecdf[i].probability)
        << ',' << format_number(t_cdf(x, fit.nu, fit.location, fit.scale))
        << ',' << format_number(normal_cdf(z)) << '\n';
  }
  finish(out, path);
}

void write_trajectory(const Trajectory& traj, std::ostream& out) {
  out << "t,x,y,z\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << format_number(traj.time(i)) << ',' << format_number(traj.x[i]) << ','
        << format_number(traj.y[i]) << ',' << format_number(traj.z[i]) << '\n';
  }
}

void write_trajectory(const Trajectory& traj, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_trajectory(traj, static_cast<std::ostream&>(out));
  finish(out, path);
}

}  // namespace fattail

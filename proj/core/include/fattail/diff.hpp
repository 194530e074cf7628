#pragma once

#include "fattail/series.hpp"

namespace fattail {

/// out[i] = s[i+1] - s[i]. Requires at least two samples.
Series diff_plain(const Series& s);

/// Change relative to the trailing mean of the k samples ending at the
/// current one:
///
///   out = (s[i] - s[i-1]) / mean(s[i-k+1 .. i]),   i >= max(1, k-1)
///
/// Output length is size() - max(1, k-1). A window mean with magnitude
/// <= 1e-12 raises an Error naming the index.
Series diff_ratio(const Series& s, int k);

/// out[i] = ln(s[i+1]) - ln(s[i]). Every sample must be strictly positive.
Series diff_log(const Series& s);

/// Applies the first-order operator selected by spec.method once, then
/// diff_plain (spec.order - 1) more times. Ratio and log are first-order
/// transforms only; higher orders difference the transformed series.
Series diff_n(const Series& s, const DiffSpec& spec);

}  // namespace fattail

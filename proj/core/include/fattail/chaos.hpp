#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fattail/series.hpp"

namespace fattail {

enum class ChaosSystem { lorenz, duffing, chua };

std::string_view to_string(ChaosSystem s) noexcept;
ChaosSystem parse_chaos_system(std::string_view name);

/// Parameters and integration settings for one chaotic trajectory.
///
/// Parameter names per system:
///   lorenz  : sigma, rho, beta
///   duffing : delta, alpha, beta, gamma, omega
///             (x'' + delta x' + alpha x + beta x^3 = gamma cos(omega t))
///   chua    : alpha, beta, m0, m1   (dimensionless, piecewise-linear diode)
///
/// initial_state always has three entries. For duffing they are
/// (x, x', forcing phase).
struct ChaosSpec {
  ChaosSystem system = ChaosSystem::lorenz;
  std::map<std::string, double> params;
  std::vector<double> initial_state;
  double dt = 0.0;
  std::int64_t steps = 0;
  std::int64_t discard = 0;
  std::optional<double> seed_perturbation;
};

/// Canonical chaotic parameterization with the sampling step used for
/// that system (0.002 lorenz, 0.02 duffing, 0.002 chua).
ChaosSpec default_spec(ChaosSystem system);
ChaosSpec default_spec(std::string_view system);

/// Transient length used when the caller does not choose one:
/// 10% of steps but at least 5000, falling back to 10% for runs too short
/// to afford 5000.
std::int64_t default_discard(std::int64_t steps) noexcept;

/// Throws Error(Module::chaos) if the spec is malformed.
void validate(const ChaosSpec& spec);

/// Retained samples of the three state components. Sample i is the state
/// after (discard + 1 + i) integration steps.
struct Trajectory {
  Series x;
  Series y;
  Series z;
  std::int64_t first_step = 1;
  double dt = 0.0;

  std::size_t size() const noexcept { return x.size(); }
  double time(std::size_t i) const noexcept {
    return static_cast<double>(first_step + static_cast<std::int64_t>(i)) * dt;
  }
};

/// Fixed-step classical RK4. Deterministic for a given spec.
/// Throws Error "trajectory diverged at step N" on a non-finite state.
Trajectory simulate(const ChaosSpec& spec);

}  // namespace fattail

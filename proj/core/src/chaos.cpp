#include "fattail/chaos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "fattail/error.hpp"

namespace fattail {
namespace {

using State = std::array<double, 3>;

const std::vector<std::string>& param_names(ChaosSystem system) {
  static const std::vector<std::string> lorenz{"sigma", "rho", "beta"};
  static const std::vector<std::string> duffing{"delta", "alpha", "beta",
                                                "gamma", "omega"};
  static const std::vector<std::string> chua{"alpha", "beta", "m0", "m1"};
  switch (system) {
    case ChaosSystem::duffing: return duffing;
    case ChaosSystem::chua: return chua;
    case ChaosSystem::lorenz: break;
  }
  return lorenz;
}

State axpy(const State& s, double h, const State& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]};
}

template <typename Rhs>
State rk4_step(const Rhs& f, double t, const State& s, double h) {
  const State k1 = f(t, s);
  const State k2 = f(t + 0.5 * h, axpy(s, 0.5 * h, k1));
  const State k3 = f(t + 0.5 * h, axpy(s, 0.5 * h, k2));
  const State k4 = f(t + h, axpy(s, h, k3));
  State out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// post_step lets a system overwrite components that are not integrated
// (the Duffing forcing phase).
template <typename Rhs, typename PostStep>
Trajectory integrate(const ChaosSpec& spec, const Rhs& f, PostStep post_step) {
  State s{spec.initial_state[0], spec.initial_state[1], spec.initial_state[2]};
  if (spec.seed_perturbation) s[0] += *spec.seed_perturbation;

  const auto retained = static_cast<std::size_t>(spec.steps - spec.discard);
  std::vector<double> xs, ys, zs;
  xs.reserve(retained);
  ys.reserve(retained);
  zs.reserve(retained);

  for (std::int64_t n = 0; n < spec.steps; ++n) {
    // Time from the step counter so it never accumulates rounding error.
    const double t = static_cast<double>(n) * spec.dt;
    s = rk4_step(f, t, s, spec.dt);
    post_step(n + 1, s);
    if (!(std::isfinite(s[0]) && std::isfinite(s[1]) && std::isfinite(s[2]))) {
      throw Error(Module::chaos,
                  "trajectory diverged at step " + std::to_string(n + 1));
    }
    if (n >= spec.discard) {
      xs.push_back(s[0]);
      ys.push_back(s[1]);
      zs.push_back(s[2]);
    }
  }

  const std::string name(to_string(spec.system));
  Trajectory out;
  out.x = Series(std::move(xs), spec.dt, name + ".x");
  out.y = Series(std::move(ys), spec.dt, name + ".y");
  out.z = Series(std::move(zs), spec.dt, name + ".z");
  out.first_step = spec.discard + 1;
  out.dt = spec.dt;
  return out;
}

}  // namespace

std::string_view to_string(ChaosSystem s) noexcept {
  switch (s) {
    case ChaosSystem::lorenz: return "lorenz";
    case ChaosSystem::duffing: return "duffing";
    case ChaosSystem::chua: return "chua";
  }
  return "unknown";
}

ChaosSystem parse_chaos_system(std::string_view name) {
  if (name == "lorenz") return ChaosSystem::lorenz;
  if (name == "duffing") return ChaosSystem::duffing;
  if (name == "chua") return ChaosSystem::chua;
  throw Error(Module::chaos, "unknown system '" + std::string(name) + "'");
}

std::int64_t default_discard(std::int64_t steps) noexcept {
  const std::int64_t tenth = steps / 10;
  const std::int64_t preferred = std::max<std::int64_t>(tenth, 5000);
  return preferred < steps ? preferred : tenth;
}

ChaosSpec default_spec(ChaosSystem system) {
  ChaosSpec spec;
  spec.system = system;
  switch (system) {
    case ChaosSystem::lorenz:
      spec.params = {{"sigma", 10.0}, {"rho", 28.0}, {"beta", 8.0 / 3.0}};
      spec.initial_state = {1.0, 1.0, 1.0};
      spec.dt = 0.002;
      spec.steps = 600'000;
      break;
    case ChaosSystem::duffing:
      spec.params = {{"delta", 0.3}, {"alpha", -1.0}, {"beta", 1.0},
                     {"gamma", 0.5}, {"omega", 1.2}};
      spec.initial_state = {0.1, 0.0, 0.0};
      spec.dt = 0.02;
      spec.steps = 500'000;
      break;
    case ChaosSystem::chua:
      spec.params = {{"alpha", 15.6}, {"beta", 28.0},
                     {"m0", -8.0 / 7.0}, {"m1", -5.0 / 7.0}};
      spec.initial_state = {0.7, 0.0, 0.0};
      spec.dt = 0.002;
      spec.steps = 600'000;
      break;
  }
  spec.discard = default_discard(spec.steps);
  return spec;
}

ChaosSpec default_spec(std::string_view system) {
  return default_spec(parse_chaos_system(system));
}

void validate(const ChaosSpec& spec) {
  if (!(std::isfinite(spec.dt) && spec.dt > 0.0)) {
    throw Error(Module::chaos, "dt must be positive");
  }
  if (spec.discard < 0) {
    throw Error(Module::chaos, "discard must be non-negative");
  }
  if (spec.steps <= spec.discard) {
    throw Error(Module::chaos, "steps must exceed discard");
  }
  if (spec.initial_state.size() != 3) {
    throw Error(Module::chaos, "initial_state must have 3 components for " +
                                   std::string(to_string(spec.system)));
  }
  for (double v : spec.initial_state) {
    if (!std::isfinite(v)) {
      throw Error(Module::chaos, "initial_state must be finite");
    }
  }
  if (spec.seed_perturbation && !std::isfinite(*spec.seed_perturbation)) {
    throw Error(Module::chaos, "seed perturbation must be finite");
  }
  const auto& names = param_names(spec.system);
  const std::set<std::string> known(names.begin(), names.end());
  for (const auto& [name, value] : spec.params) {
    if (!known.contains(name)) {
      throw Error(Module::chaos, "unknown parameter '" + name + "' for " +
                                     std::string(to_string(spec.system)));
    }
    if (!std::isfinite(value)) {
      throw Error(Module::chaos, "parameter '" + name + "' must be finite");
    }
  }
  for (const auto& name : names) {
    if (!spec.params.contains(name)) {
      throw Error(Module::chaos, "missing parameter '" + name + "'");
    }
  }
}

Trajectory simulate(const ChaosSpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  const auto no_post = [](std::int64_t, State&) {};

  switch (spec.system) {
    case ChaosSystem::lorenz: {
      const double sigma = p.at("sigma"), rho = p.at("rho"), beta = p.at("beta");
      const auto f = [=](double, const State& s) -> State {
        return {sigma * (s[1] - s[0]), s[0] * (rho - s[2]) - s[1],
                s[0] * s[1] - beta * s[2]};
      };
      return integrate(spec, f, no_post);
    }
    case ChaosSystem::duffing: {
      const double delta = p.at("delta"), alpha = p.at("alpha"),
                   beta = p.at("beta"), gamma = p.at("gamma"),
                   omega = p.at("omega");
      const double phase0 = spec.initial_state[2];
      const auto f = [=](double t, const State& s) -> State {
        const double force = gamma * std::cos(phase0 + omega * t);
        return {s[1],
                force - delta * s[1] - alpha * s[0] - beta * s[0] * s[0] * s[0],
                0.0};
      };
      const double dt = spec.dt;
      const auto set_phase = [=](std::int64_t n, State& s) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double phase =
            std::fmod(phase0 + omega * static_cast<double>(n) * dt, two_pi);
        if (phase < 0.0) phase += two_pi;
        s[2] = phase;
      };
      return integrate(spec, f, set_phase);
    }
    case ChaosSystem::chua: {
      const double alpha = p.at("alpha"), beta = p.at("beta"),
                   m0 = p.at("m0"), m1 = p.at("m1");
      const auto f = [=](double, const State& s) -> State {
        const double diode =
            m1 * s[0] + 0.5 * (m0 - m1) * (std::abs(s[0] + 1.0) -
                                           std::abs(s[0] - 1.0));
        return {alpha * (s[1] - s[0] - diode), s[0] - s[1] + s[2],
                -beta * s[1]};
      };
      return integrate(spec, f, no_post);
    }
  }
  throw Error(Module::chaos, "unknown system");
}

}  // namespace fattail

#include "dowker/lorenz.hpp"

#include <cmath>

#include "dowker/error.hpp"

namespace dowker {

namespace {

using State = std::array<double, 3>;

State field(const State& s, const LorenzParameters& p) {
  return {p.sigma * (s[1] - s[0]), s[0] * (p.rho - s[2]) - s[1], s[0] * s[1] - p.beta * s[2]};
}

State axpy(const State& x, double a, const State& y) { return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]}; }

}  // namespace

Trajectory lorenz63(std::array<double, 3> initial, double t_end, double dt, const LorenzParameters& p) {
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(Errc::InvalidArgument, "dt must be positive");
  if (!std::isfinite(t_end) || t_end < dt * (1.0 - 1e-9)) fail(Errc::InvalidArgument, "t_end must be at least dt");
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));

  std::vector<double> times, data;
  times.reserve(steps + 1);
  data.reserve(3 * (steps + 1));
  State s = initial;
  for (std::size_t i = 0;; ++i) {
    for (double x : s)
      if (!std::isfinite(x)) fail(Errc::NonFinite, "Lorenz state left finite range at step " + std::to_string(i));
    times.push_back(static_cast<double>(i) * dt);
    data.insert(data.end(), s.begin(), s.end());
    if (i == steps) break;
    const State k1 = field(s, p);
    const State k2 = field(axpy(s, dt / 2, k1), p);
    const State k3 = field(axpy(s, dt / 2, k2), p);
    const State k4 = field(axpy(s, dt, k3), p);
    for (int c = 0; c < 3; ++c) s[c] += dt / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
  }
  return Trajectory(3, std::move(times), std::move(data));
}

}  // namespace dowker

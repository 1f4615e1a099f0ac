#pragma once

#include <array>

#include "dowker/trajectory.hpp"

namespace dowker {

struct LorenzParameters {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
};

/// Classical fourth-order Runge-Kutta with fixed step dt, from t = 0 for
/// round(t_end / dt) steps; the initial state is the first sample.
/// Errc::InvalidArgument unless dt > 0 and t_end >= dt; Errc::NonFinite if
/// the state blows up.
Trajectory lorenz63(std::array<double, 3> initial, double t_end, double dt, const LorenzParameters& p = {});

}  // namespace dowker

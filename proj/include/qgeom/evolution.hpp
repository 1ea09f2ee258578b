#pragma once

// Exact unitary flow e^{−iAt} by spectral exponentiation and the
// Fubini–Study speed of the projected trajectory.

#include <vector>

#include "qgeom/hilbert.hpp"

namespace qgeom {

/// Caches the spectral decomposition of a generator so repeated flows are
/// two matrix-vector products each.
class Propagator {
 public:
  explicit Propagator(const Observable& generator);

  [[nodiscard]] State apply(const State& phi, double t) const;
  [[nodiscard]] const SpectralDecomposition& spectrum() const noexcept {
    return sd_;
  }

 private:
  SpectralDecomposition sd_;
};

State flow(const Observable& a, const State& phi, double t);

/// 1e-4 / spectral range, or 1e-4 for multiples of the identity.
double default_dt(const Observable& a);

/// fs_distance(flow(−dt), flow(+dt)) / (2·dt). Converges to ΔA as O(dt²).
double projected_speed(const Observable& a, const State& phi, double dt);

struct FlowTrace {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> fs_speeds;
  std::vector<double> std_devs;
};

/// Uniform grid t_k = k·t_max/(steps − 1), k = 0..steps−1.
FlowTrace trace_flow(const Observable& a, const State& phi, double t_max,
                     int steps);

}  // namespace qgeom

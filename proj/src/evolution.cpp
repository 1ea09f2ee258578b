#include "qgeom/evolution.hpp"

#include <string>

#include "qgeom/projective.hpp"
#include "qgeom/uncertainty.hpp"

namespace qgeom {
namespace {

double speed_with(const Propagator& prop, const State& phi, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "projected_speed: dt must be positive");
  }
  return fs_distance(prop.apply(phi, -dt), prop.apply(phi, dt)) / (2.0 * dt);
}

}  // namespace

Propagator::Propagator(const Observable& generator)
    : sd_(spectral(generator)) {}

State Propagator::apply(const State& phi, double t) const {
  require_same_dim(sd_.eigenvectors.rows(), phi.dim(), "flow");
  const CVector phases =
      (Complex(0.0, -t) * sd_.eigenvalues.cast<Complex>()).array().exp();
  const CVector coeffs =
      phases.cwiseProduct(sd_.eigenvectors.adjoint() * phi.amplitudes());
  return State::normalized(sd_.eigenvectors * coeffs);
}

State flow(const Observable& a, const State& phi, double t) {
  return Propagator(a).apply(phi, t);
}

double default_dt(const Observable& a) {
  const double range = spectral_range(a);
  return range > 0.0 ? 1e-4 / range : 1e-4;
}

double projected_speed(const Observable& a, const State& phi, double dt) {
  return speed_with(Propagator(a), phi, dt);
}

FlowTrace trace_flow(const Observable& a, const State& phi, double t_max,
                     int steps) {
  if (steps < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "trace_flow: steps must be at least 2, got " +
                    std::to_string(steps));
  }
  require_same_dim(a.dim(), phi.dim(), "trace_flow");
  const Propagator prop(a);
  const RVector& ev = prop.spectrum().eigenvalues;
  const double range = ev(ev.size() - 1) - ev(0);
  const double dt = range > 0.0 ? 1e-4 / range : 1e-4;

  FlowTrace trace;
  trace.times.reserve(steps);
  trace.states.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double t = t_max * k / (steps - 1);
    State state = prop.apply(phi, t);
    trace.times.push_back(t);
    trace.fs_speeds.push_back(speed_with(prop, state, dt));
    trace.std_devs.push_back(std_dev(a, state));
    trace.states.push_back(std::move(state));
  }
  return trace;
}

}  // namespace qgeom

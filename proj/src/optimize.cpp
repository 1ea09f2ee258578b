#include "qgeom/optimize.hpp"

#include <string>

#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"

namespace qgeom {

double uncertainty_product_sq(const Observable& a, const Observable& b,
                              const State& phi) {
  const double va = tangent_field(a, phi, true).vec.squaredNorm();
  const double vb = tangent_field(b, phi, true).vec.squaredNorm();
  return va * vb;
}

CVector riemannian_grad(const Observable& a, const Observable& b,
                        const State& phi) {
  require_same_dim(a.dim(), b.dim(), "riemannian_grad");
  require_same_dim(a.dim(), phi.dim(), "riemannian_grad");
  const CVector& v = phi.amplitudes();
  // ∇(φ†Mφ) = 2Mφ, so ∇Var_A = 2A²φ − 4Ā·Aφ = 2A⊥²φ − 2Ā²φ; the last term is
  // radial and drops out under the horizontal projection.
  const CVector av = a.apply(v);
  const CVector bv = b.apply(v);
  const CVector ac = av - inner(av, v).real() * v;
  const CVector bc = bv - inner(bv, v).real() * v;
  const double var_a = ac.squaredNorm();
  const double var_b = bc.squaredNorm();
  const CVector a2 = a.apply(ac) - inner(av, v).real() * ac;
  const CVector b2 = b.apply(bc) - inner(bv, v).real() * bc;
  const CVector g = 2.0 * var_b * a2 + 2.0 * var_a * b2;
  return horizontal(g, phi);
}

OptimizeResult minimize_product(const Observable& a, const Observable& b,
                                const State& start,
                                const DescentOptions& opts) {
  if (opts.max_iter < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "minimize_product: max_iter must be at least 1");
  }
  const double stop = opts.grad_tol * pair_scale(a, b);

  State x = start;
  double fx = uncertainty_product_sq(a, b, x);
  OptimizeResult out{.state = x, .value = fx, .certificate = {}, .objective_trace = {}};
  out.objective_trace.push_back(fx);

  for (int it = 0; it < opts.max_iter; ++it) {
    const CVector g = riemannian_grad(a, b, x);
    const double gnorm = g.norm();
    if (gnorm <= stop) {
      out.converged = true;
      break;
    }
    double step = 1.0 / gnorm;
    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      State cand = State::normalized(x.amplitudes() - step * g);
      const double fc = uncertainty_product_sq(a, b, cand);
      if (fc <= fx - opts.armijo * step * gnorm * gnorm) {
        x = std::move(cand);
        fx = fc;
        accepted = true;
        break;
      }
      step *= opts.shrink;
    }
    if (!accepted) break;  // no representable decrease left
    ++out.iterations;
    out.objective_trace.push_back(fx);
  }
  if (!out.converged) {
    out.converged = riemannian_grad(a, b, x).norm() <= stop;
  }

  out.state = x;
  out.value = fx;
  try {
    out.certificate = minimal_condition(a, b, x, opts.certificate_tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateX) throw;
  }
  return out;
}

OptimizeResult minimize_multistart(const Observable& a, const Observable& b,
                                   const std::optional<State>& start,
                                   const MultiStartOptions& opts) {
  if (opts.restarts < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "minimize: restarts must be at least 1, got " +
                    std::to_string(opts.restarts));
  }
  std::optional<OptimizeResult> best;
  for (int k = 0; k < opts.restarts; ++k) {
    State init = [&] {
      if (k == 0 && start) return *start;
      Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(k)));
      return haar_state(a.dim(), rng);
    }();
    OptimizeResult r = minimize_product(a, b, init, opts.descent);
    r.seed = opts.seed;
    r.restart = k;
    if (!best || r.value < best->value) best = std::move(r);
  }
  return *best;
}

}  // namespace qgeom

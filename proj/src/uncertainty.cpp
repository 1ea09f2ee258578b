#include "qgeom/uncertainty.hpp"

#include <cmath>
#include <limits>

#include "qgeom/realify.hpp"

namespace qgeom {
namespace {

const Complex kMinusI{0.0, -1.0};

// A⊥·v for A⊥ = A − mean·I.
CVector apply_centered(const Observable& a, double mean, const CVector& v) {
  return a.apply(v) - mean * v;
}

}  // namespace

TangentVector tangent_field(const Observable& a, const State& phi,
                            bool center) {
  require_same_dim(a.dim(), phi.dim(), "tangent_field");
  const CVector& v = phi.amplitudes();
  CVector av = a.apply(v);
  if (center) {
    // Ā read off the already computed A·φ.
    av -= inner(av, v).real() * v;
  }
  return {phi, kMinusI * av};
}

double std_dev(const Observable& a, const State& phi) {
  return tangent_field(a, phi, true).vec.norm();
}

bool is_eigenstate(const Observable& a, const State& phi) {
  const double threshold =
      1e-8 * spectral_range(a) +
      16.0 * std::numeric_limits<double>::epsilon() * a.scale();
  return std_dev(a, phi) <= threshold;
}

double pair_scale(const Observable& a, const Observable& b) {
  return a.scale() * b.scale();
}

UncertaintyReport relations_report(const Observable& a, const Observable& b,
                                   const State& phi) {
  require_same_dim(a.dim(), b.dim(), "relations_report");
  require_same_dim(a.dim(), phi.dim(), "relations_report");
  const CVector& v = phi.amplitudes();

  UncertaintyReport r;
  r.scale = pair_scale(a, b);

  const CVector x = tangent_field(a, phi, true).vec;
  const CVector y = tangent_field(b, phi, true).vec;
  r.delta_a = x.norm();
  r.delta_b = y.norm();
  r.area = parallelogram_area(x, y);
  r.metric_term = metric_g(x, y);

  // Operator route: ⟨φ, [A,B]φ⟩ and ⟨φ, {A⊥,B⊥}φ⟩ without forming products.
  const CVector av = a.apply(v);
  const CVector bv = b.apply(v);
  const Complex comm = inner(v, a.apply(bv) - b.apply(av));
  r.commutator_half = 0.5 * std::abs(comm);

  const double mean_a = inner(av, v).real();
  const double mean_b = inner(bv, v).real();
  const CVector ac = av - mean_a * v;
  const CVector bc = bv - mean_b * v;
  const Complex anti =
      inner(v, apply_centered(a, mean_a, bc) + apply_centered(b, mean_b, ac));
  r.anticommutator_half = 0.5 * std::abs(anti);

  r.commutator_half_geometric = std::abs(symplectic(x, y));

  const double product = r.delta_a * r.delta_b;
  const double product_sq = product * product;
  r.identity_residual =
      product_sq - r.area * r.area - r.metric_term * r.metric_term;
  r.robertson_slack = product - r.commutator_half;
  r.area_bound_slack = r.area - r.commutator_half;
  r.schrodinger_slack = product_sq - r.commutator_half * r.commutator_half -
                        r.anticommutator_half * r.anticommutator_half;

  r.degenerate = is_eigenstate(a, phi) || is_eigenstate(b, phi);
  r.theta = r.degenerate ? 0.0 : std::atan2(r.area, r.metric_term);
  return r;
}

MinimalConditionResult minimal_condition(const Observable& a,
                                         const Observable& b, const State& phi,
                                         double tol) {
  require_same_dim(a.dim(), b.dim(), "minimal_condition");
  const CVector x = tangent_field(a, phi, true).vec;
  const CVector y = tangent_field(b, phi, true).vec;
  const double xnorm = x.norm();
  if (!(xnorm > tol * a.scale())) {
    throw Error(ErrorKind::DegenerateX,
                "minimal_condition: centered field of A vanishes (state is an "
                "eigenstate of A)");
  }
  MinimalConditionResult out;
  out.lambda = inner(y, x) / (xnorm * xnorm);
  out.re_lambda = out.lambda.real();
  out.residual = (y - out.lambda * x).norm() / std::max(y.norm(), tol);
  const bool imaginary = std::abs(out.lambda) == 0.0 ||
                         std::abs(out.re_lambda) <= tol * std::abs(out.lambda);
  out.is_minimal = out.residual <= tol && imaginary;
  return out;
}

}  // namespace qgeom

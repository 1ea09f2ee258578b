#include "qgeom/projective.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace qgeom {
namespace {

// Angle between φ and the subspace spanned by the orthonormal columns of q,
// as atan2(‖(1 − QQ†)φ‖, ‖Q†φ‖). Same value as arccos‖Q†φ‖ but accurate
// for small angles.
double angle_to_subspace(const CMatrix& q, const CVector& phi) {
  const CVector coeffs = q.adjoint() * phi;
  const double cosine = std::min(1.0, coeffs.norm());
  const double sine = (phi - q * coeffs).norm();
  return std::atan2(sine, cosine);
}

// Smallest principal angle between span(p) and span(q). The largest singular
// value of Q†P is its cosine and the smallest singular value of (1 − QQ†)P its
// sine.
double smallest_principal_angle(const CMatrix& p, const CMatrix& q) {
  const CMatrix overlap = q.adjoint() * p;
  const CMatrix residual = p - q * overlap;
  const Eigen::JacobiSVD<CMatrix> cos_svd(overlap);
  const Eigen::JacobiSVD<CMatrix> sin_svd(residual);
  const double cosine = std::min(1.0, cos_svd.singularValues().maxCoeff());
  const double sine = sin_svd.singularValues().minCoeff();
  return std::atan2(sine, cosine);
}

}  // namespace

bool same_ray(const Ray& a, const Ray& b, double tol) {
  return fs_distance(a.representative, b.representative) <= tol;
}

EigenSet EigenSet::of(const Observable& a) {
  return {spectral(a).eigenspaces(a.scale())};
}

double fs_distance(const State& phi, const State& psi, double scale) {
  require_same_dim(phi.dim(), psi.dim(), "fs_distance");
  const CVector& u = phi.amplitudes();
  const CVector& v = psi.amplitudes();
  const Complex uv = inner(u, v);
  const Complex vu = inner(v, u);
  // Both orthogonal residuals are averaged so the result is exactly
  // symmetric in its arguments.
  const double sine = 0.5 * ((v - vu * u).norm() + (u - uv * v).norm());
  const double cosine = 0.5 * (std::abs(uv) + std::abs(vu));
  return scale * std::atan2(sine, std::min(1.0, cosine));
}

CVector horizontal(const CVector& xi, const State& phi) {
  require_same_dim(xi.size(), phi.dim(), "horizontal");
  return xi - inner(xi, phi.amplitudes()) * phi.amplitudes();
}

double dist_to_eigenset(const EigenSet& set, const State& phi, double scale) {
  double best = M_PI;
  for (const Eigenspace& es : set.eigenspaces) {
    require_same_dim(es.basis.rows(), phi.dim(), "dist_to_eigenset");
    best = std::min(best, angle_to_subspace(es.basis, phi.amplitudes()));
  }
  return scale * best;
}

double dist_to_eigenset(const Observable& a, const State& phi, double scale) {
  return dist_to_eigenset(EigenSet::of(a), phi, scale);
}

double eigenset_distance(const EigenSet& sa, const EigenSet& sb,
                         double scale) {
  double best = M_PI;
  for (const Eigenspace& p : sa.eigenspaces) {
    for (const Eigenspace& q : sb.eigenspaces) {
      require_same_dim(p.basis.rows(), q.basis.rows(), "eigenset_distance");
      best = std::min(best, smallest_principal_angle(p.basis, q.basis));
    }
  }
  return scale * best;
}

double eigenset_distance(const Observable& a, const Observable& b,
                         double scale) {
  return eigenset_distance(EigenSet::of(a), EigenSet::of(b), scale);
}

TriangleReport triangle_report(const Observable& a, const Observable& b,
                               const State& phi, double scale) {
  require_same_dim(a.dim(), b.dim(), "triangle_report");
  const EigenSet sa = EigenSet::of(a);
  const EigenSet sb = EigenSet::of(b);
  TriangleReport r;
  r.d_phi_a = dist_to_eigenset(sa, phi, scale);
  r.d_phi_b = dist_to_eigenset(sb, phi, scale);
  r.d_a_b = eigenset_distance(sa, sb, scale);
  r.slack = r.d_phi_a + r.d_phi_b - r.d_a_b;
  return r;
}

}  // namespace qgeom

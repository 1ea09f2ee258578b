#include "qgeom/realify.hpp"

#include <cmath>

namespace qgeom {
namespace {

constexpr double kLineTol = 1e-12;

// Any unit vector orthogonal to e1: Gram–Schmidt on the first standard basis
// vector that is not (nearly) parallel to it.
CVector complete_orthonormal(const CVector& e1) {
  for (Eigen::Index k = 0; k < e1.size(); ++k) {
    CVector v = CVector::Zero(e1.size());
    v(k) = 1.0;
    v -= inner(v, e1) * e1;
    const double n = v.norm();
    if (n > 0.5) return v / n;
  }
  // Unreachable for n >= 2: some basis vector has overlap <= 1/sqrt(2).
  throw Error(ErrorKind::DimensionTooSmall, "cannot complete orthonormal pair");
}

}  // namespace

RealizedVector realize(const CVector& xi) {
  RVector coords(2 * xi.size());
  for (Eigen::Index k = 0; k < xi.size(); ++k) {
    coords(2 * k) = xi(k).real();
    coords(2 * k + 1) = xi(k).imag();
  }
  return {std::move(coords)};
}

double metric_g(const CVector& xi, const CVector& eta) {
  return inner(xi, eta).real();
}

double symplectic(const CVector& xi, const CVector& eta) {
  return inner(xi, eta).imag();
}

double parallelogram_area(const CVector& xi, const CVector& eta) {
  require_same_dim(xi.size(), eta.size(), "parallelogram_area");
  // Gram determinant evaluated as base × height: ‖xi‖·‖eta − (G/‖xi‖²)·xi‖.
  // Algebraically sqrt(‖xi‖²‖eta‖² − G²) but without the cancellation that
  // leaves sqrt(eps)-sized areas for nearly parallel vectors.
  const double base_sq = xi.squaredNorm();
  if (base_sq == 0.0) return 0.0;
  const double g = metric_g(xi, eta);
  const CVector height = eta - (g / base_sq) * xi;
  return std::sqrt(base_sq) * height.norm();
}

AdaptedCoordinates adapted_basis(const CVector& x, const CVector& y) {
  require_same_dim(x.size(), y.size(), "adapted_basis");
  const double xnorm = x.norm();
  if (xnorm <= kLineTol) {
    throw Error(ErrorKind::ZeroVector, "adapted_basis: X vanishes");
  }
  AdaptedCoordinates out;
  out.e1 = x / xnorm;
  const Complex along = inner(y, out.e1);
  const CVector rest = y - along * out.e1;
  const double rest_norm = rest.norm();
  if (rest_norm < kLineTol * y.norm() || rest_norm == 0.0) {
    out.y_in_line_of_x = true;
    out.e2 = complete_orthonormal(out.e1);
  } else {
    out.e2 = rest / rest_norm;
  }
  out.x = {xnorm, 0.0, 0.0, 0.0};
  // Re inner(Y, i·e) = Re(conj(i)·inner(Y, e)) = Im inner(Y, e).
  const Complex across = out.y_in_line_of_x ? Complex{} : inner(y, out.e2);
  out.y = {along.real(), along.imag(), across.real(), across.imag()};
  return out;
}

}  // namespace qgeom

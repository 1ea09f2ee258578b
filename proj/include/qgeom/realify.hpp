#pragma once

// Realification of C^n as R^{2n}. With inner(xi, eta) = sum xi_k conj(eta_k),
// Re inner is the Euclidean metric G of the real space and Im inner is an
// antisymmetric 2-form. Coordinates interleave as (Re xi_1, Im xi_1, ...).

#include <array>

#include "qgeom/hilbert.hpp"

namespace qgeom {

struct RealizedVector {
  RVector coords;  // length 2n, coords[2k] = Re xi_k, coords[2k+1] = Im xi_k
};

RealizedVector realize(const CVector& xi);

double metric_g(const CVector& xi, const CVector& eta);
double symplectic(const CVector& xi, const CVector& eta);

/// Area of the real parallelogram spanned by xi and eta, from the Gram
/// determinant ‖xi‖²‖eta‖² − G(xi,eta)².
double parallelogram_area(const CVector& xi, const CVector& eta);

/// Coordinates of X and Y in the real orthonormal basis
///   E1 = e1, E2 = i·e1, E3 = e2, E4 = i·e2
/// where e1 = X/‖X‖ and e2 completes the complex span of {X, Y}.
/// A vector v has coordinate Re inner(v, E_k) along E_k, so that
/// symplectic(X, Y) = (x2·y1 − x1·y2) + (x4·y3 − x3·y4).
struct AdaptedCoordinates {
  std::array<double, 4> x{};
  std::array<double, 4> y{};
  CVector e1;
  CVector e2;
  bool y_in_line_of_x = false;  // e2 was completed arbitrarily
};

AdaptedCoordinates adapted_basis(const CVector& x, const CVector& y);

}  // namespace qgeom

#pragma once

// Pauli matrices and tensor products for spin-1/2 fixtures.

#include "qgeom/hilbert.hpp"

namespace qgeom::spin {

Observable sigma_x();
Observable sigma_y();
Observable sigma_z();
Observable identity(Eigen::Index n);

/// Kronecker product a ⊗ b.
Observable kron(const Observable& a, const Observable& b);

}  // namespace qgeom::spin

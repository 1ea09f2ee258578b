#pragma once

// Position and momentum on a 1-D periodic grid. Momentum is spectral:
// p = F†·diag(ħk)·F with F the unitary DFT and k = 2πm/L for the signed
// layout m ∈ {−n/2, …, n/2 − 1}.
//
// No finite-dimensional pair satisfies [x, p] = iħ exactly (the trace of a
// commutator is zero), so canonical relations hold only approximately, for
// states concentrated away from the box edges and below the Nyquist band.

#include "qgeom/hilbert.hpp"

namespace qgeom {

class Grid {
 public:
  /// n ≥ 16 and a power of two; length > 0; hbar > 0.
  Grid(int n, double length, double hbar = 1.0);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] double length() const noexcept { return length_; }
  [[nodiscard]] double hbar() const noexcept { return hbar_; }
  [[nodiscard]] double spacing() const noexcept { return length_ / n_; }
  /// x_j = −L/2 + j·L/n.
  [[nodiscard]] RVector points() const;

 private:
  int n_;
  double length_;
  double hbar_;
};

Observable position_op(const Grid& g);
Observable momentum_op(const Grid& g);

/// exp(−(x−x0)²/(4σ²))·exp(i·p0·x/ħ), normalized on the grid. Requires
/// L ≥ 10σ and |x0| ≤ L/2 − 5σ.
State gaussian(const Grid& g, double x0, double p0, double sigma);

/// ‖([x, p] − iħ)·φ‖.
double commutator_residual(const Grid& g, const State& phi);

}  // namespace qgeom

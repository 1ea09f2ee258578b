#pragma once

// Finite-dimensional complex Hilbert space: unit states, Hermitian
// observables, the inner product and spectral decomposition.
//
// Inner-product convention: inner(xi, eta) = sum_k xi_k * conj(eta_k), i.e.
// linear in the FIRST argument and conjugate-linear in the second. The
// realified symplectic form Im inner(xi, eta) changes sign under the opposite
// convention, so every module goes through inner() rather than Eigen's dot().

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qgeom/error.hpp"

namespace qgeom {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kZeroNorm = 1e-14;
inline constexpr double kDegenerateGap = 1e-8;
}  // namespace tol

/// max(1, largest entry magnitude). All relative tolerances are taken
/// against this.
double magnitude_scale(const CMatrix& m);

/// Point on the unit sphere of C^n, n >= 2.
class State {
 public:
  /// Validates and renormalizes: |‖v‖ - 1| must be within `tol`.
  static State from_vector(const CVector& v, double tol = tol::kUnitNorm);
  /// Normalizes any non-zero vector.
  static State normalized(const CVector& v);
  static State basis(Eigen::Index n, Eigen::Index k);

  [[nodiscard]] const CVector& amplitudes() const noexcept { return amps_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return amps_.size(); }
  [[nodiscard]] State with_phase(double alpha) const;

 private:
  explicit State(CVector amps) : amps_(std::move(amps)) {}
  CVector amps_;
};

State validate_state(const CVector& v, double tol = tol::kUnitNorm);

/// Hermitian matrix, checked on construction.
class Observable {
 public:
  static Observable from_matrix(CMatrix m, double tol = tol::kHermitian);

  [[nodiscard]] const CMatrix& matrix() const noexcept { return m_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
  [[nodiscard]] double scale() const { return magnitude_scale(m_); }

  [[nodiscard]] CVector apply(const CVector& v) const;

 private:
  explicit Observable(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// max|M - M†| relative to magnitude_scale(M).
double hermiticity_residual(const CMatrix& m);

Complex inner(const CVector& xi, const CVector& eta);

double expectation(const Observable& a, const State& phi);

Observable centered(const Observable& a, const State& phi);

struct Brackets {
  CMatrix commutator;      // AB - BA, anti-Hermitian
  CMatrix anticommutator;  // AB + BA, Hermitian
};

Brackets brackets(const Observable& a, const Observable& b);

struct Eigenspace {
  double eigenvalue;
  CMatrix basis;  // orthonormal columns
};

struct SpectralDecomposition {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns

  /// Clusters with consecutive gap < kDegenerateGap * scale are merged.
  [[nodiscard]] std::vector<Eigenspace> eigenspaces(double scale = 1.0) const;
  [[nodiscard]] CMatrix reconstruct() const;
};

SpectralDecomposition spectral(const Observable& a);

/// Largest minus smallest eigenvalue.
double spectral_range(const Observable& a);

}  // namespace qgeom

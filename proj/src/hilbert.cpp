#include "qgeom/hilbert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace qgeom {

double magnitude_scale(const CMatrix& m) {
  return m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
}

State State::from_vector(const CVector& v, double tol) {
  if (v.size() < 2) {
    throw Error(ErrorKind::DimensionTooSmall,
                "state needs at least 2 amplitudes, got " +
                    std::to_string(v.size()));
  }
  const double norm = v.norm();
  if (norm < tol::kZeroNorm) {
    throw Error(ErrorKind::ZeroVector, "state vector has zero norm");
  }
  if (!(std::abs(norm - 1.0) <= tol)) {
    throw Error(ErrorKind::NotNormalized,
                "state is not unit-normalized (norm " + std::to_string(norm) +
                    ")");
  }
  return State(v / norm);
}

State State::normalized(const CVector& v) {
  return from_vector(v, std::numeric_limits<double>::infinity());
}

State State::basis(Eigen::Index n, Eigen::Index k) {
  CVector v = CVector::Zero(n);
  v(k) = 1.0;
  return from_vector(v);
}

State State::with_phase(double alpha) const {
  return State(amps_ * std::polar(1.0, alpha));
}

State validate_state(const CVector& v, double tol) {
  return State::from_vector(v, tol);
}

double hermiticity_residual(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / magnitude_scale(m);
}

Observable Observable::from_matrix(CMatrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "observable matrix is not square (" + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ")");
  }
  if (m.rows() < 2) {
    throw Error(ErrorKind::DimensionTooSmall,
                "observable dimension must be at least 2");
  }
  const double residual = hermiticity_residual(m);
  if (!(residual <= tol)) {
    throw Error(ErrorKind::NotHermitian,
                "matrix is not hermitian (relative residual " +
                    std::to_string(residual) + ")");
  }
  return Observable(std::move(m));
}

CVector Observable::apply(const CVector& v) const {
  require_same_dim(m_.cols(), v.size(), "Observable::apply");
  return m_ * v;
}

Complex inner(const CVector& xi, const CVector& eta) {
  require_same_dim(xi.size(), eta.size(), "inner");
  // Eigen's dot conjugates its left operand.
  return eta.dot(xi);
}

double expectation(const Observable& a, const State& phi) {
  require_same_dim(a.dim(), phi.dim(), "expectation");
  const Complex raw = inner(a.apply(phi.amplitudes()), phi.amplitudes());
  if (std::abs(raw.imag()) > tol::kHermitian * a.scale()) {
    throw Error(ErrorKind::NotHermitian,
                "expectation value has imaginary part " +
                    std::to_string(raw.imag()));
  }
  return raw.real();
}

Observable centered(const Observable& a, const State& phi) {
  const double mean = expectation(a, phi);
  CMatrix m = a.matrix();
  m.diagonal().array() -= mean;
  return Observable::from_matrix(std::move(m));
}

Brackets brackets(const Observable& a, const Observable& b) {
  require_same_dim(a.dim(), b.dim(), "brackets");
  const CMatrix ab = a.matrix() * b.matrix();
  const CMatrix ba = b.matrix() * a.matrix();
  return {ab - ba, ab + ba};
}

std::vector<Eigenspace> SpectralDecomposition::eigenspaces(double scale) const {
  std::vector<Eigenspace> out;
  const Eigen::Index n = eigenvalues.size();
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k == n ||
        eigenvalues(k) - eigenvalues(k - 1) >= tol::kDegenerateGap * scale) {
      const Eigen::Index count = k - start;
      out.push_back({eigenvalues.segment(start, count).mean(),
                     eigenvectors.middleCols(start, count)});
      start = k;
    }
  }
  return out;
}

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

SpectralDecomposition spectral(const Observable& a) {
  // Hermitize explicitly: the solver reads only the lower triangle.
  const CMatrix h = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NotHermitian, "eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_range(const Observable& a) {
  const CMatrix h = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  return ev(ev.size() - 1) - ev(0);
}

}  // namespace qgeom

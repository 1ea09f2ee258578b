#include "qgeom/canonical.hpp"

#include <cmath>
#include <string>

namespace qgeom {

Grid::Grid(int n, double length, double hbar)
    : n_(n), length_(length), hbar_(hbar) {
  if (n < 16 || (n & (n - 1)) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "grid size must be a power of two >= 16, got " +
                    std::to_string(n));
  }
  if (!(length > 0.0) || !(hbar > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "grid length and hbar must be positive");
  }
}

RVector Grid::points() const {
  RVector x(n_);
  for (int j = 0; j < n_; ++j) x(j) = -0.5 * length_ + j * spacing();
  return x;
}

Observable position_op(const Grid& g) {
  return Observable::from_matrix(g.points().cast<Complex>().asDiagonal());
}

Observable momentum_op(const Grid& g) {
  // F†·diag(ħk)·F is circulant: p_{jl} = c_{(j−l) mod n} with
  // c_d = (1/n)·Σ_m ħ·k_m·exp(2πi·m·d/n).
  const int n = g.n();
  const double dk = 2.0 * M_PI / g.length();
  CVector c(n);
  for (int d = 0; d < n; ++d) {
    Complex sum{0.0, 0.0};
    for (int m = -n / 2; m < n / 2; ++m) {
      // Reduce m·d mod n before forming the angle to keep it small.
      const long phase_index = (static_cast<long>(m) * d) % n;
      sum += (g.hbar() * dk * m) *
             std::polar(1.0, 2.0 * M_PI * static_cast<double>(phase_index) / n);
    }
    c(d) = sum / static_cast<double>(n);
  }
  CMatrix p(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) p(j, l) = c(((j - l) % n + n) % n);
  }
  return Observable::from_matrix(std::move(p), 1e-12);
}

State gaussian(const Grid& g, double x0, double p0, double sigma) {
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "gaussian: sigma must be positive");
  }
  if (g.length() < 10.0 * sigma ||
      std::abs(x0) > 0.5 * g.length() - 5.0 * sigma) {
    throw Error(ErrorKind::SupportViolation,
                "gaussian: packet does not fit the box (need L >= 10 sigma and "
                "|x0| <= L/2 - 5 sigma)");
  }
  const RVector x = g.points();
  CVector psi(g.n());
  for (int j = 0; j < g.n(); ++j) {
    const double u = x(j) - x0;
    psi(j) = std::exp(-u * u / (4.0 * sigma * sigma)) *
             std::polar(1.0, p0 * x(j) / g.hbar());
  }
  return State::normalized(psi);
}

double commutator_residual(const Grid& g, const State& phi) {
  require_same_dim(g.n(), phi.dim(), "commutator_residual");
  const Observable x = position_op(g);
  const Observable p = momentum_op(g);
  const CVector& v = phi.amplitudes();
  const CVector comm = x.apply(p.apply(v)) - p.apply(x.apply(v));
  return (comm - Complex(0.0, g.hbar()) * v).norm();
}

}  // namespace qgeom

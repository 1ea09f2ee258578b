#include "qgeom/random.hpp"

namespace qgeom {

CVector gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return v;
}

State haar_state(Eigen::Index n, Rng& rng) {
  return State::normalized(gaussian_vector(n, rng));
}

Observable random_hermitian(Eigen::Index n, Rng& rng) {
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = gaussian_vector(n, rng);
  return Observable::from_matrix(0.5 * (g + g.adjoint()));
}

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const SpectralDecomposition sd = spectral(random_hermitian(n, rng));
  const CVector phases =
      (Complex(0.0, 1.0) * sd.eigenvalues.cast<Complex>()).array().exp();
  return sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qgeom

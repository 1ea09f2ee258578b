#include "qgeom/spin.hpp"

namespace qgeom::spin {

Observable sigma_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return Observable::from_matrix(m);
}

Observable sigma_y() {
  const Complex i{0.0, 1.0};
  CMatrix m(2, 2);
  m << 0, -i, i, 0;
  return Observable::from_matrix(m);
}

Observable sigma_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return Observable::from_matrix(m);
}

Observable identity(Eigen::Index n) {
  return Observable::from_matrix(CMatrix::Identity(n, n));
}

Observable kron(const Observable& a, const Observable& b) {
  const CMatrix& x = a.matrix();
  const CMatrix& y = b.matrix();
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return Observable::from_matrix(std::move(out));
}

}  // namespace qgeom::spin

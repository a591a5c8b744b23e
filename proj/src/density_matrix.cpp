#include "radpair/density_matrix.hpp"

#include <string>

#include "radpair/errors.hpp"

namespace radpair {

DensityMatrix::DensityMatrix(Matrix rho, int spin_dim) : rho_(std::move(rho)), spin_dim_(spin_dim) {
  if (rho_.rows() != rho_.cols() || rho_.rows() != spin_dim + 2) {
    throw DimensionError("density matrix must be square of dimension spin_dim + 2 = " +
                         std::to_string(spin_dim + 2));
  }
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace radpair

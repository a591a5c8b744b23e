#pragma once

#include <random>

#include "radpair/density_matrix.hpp"
#include "radpair/types.hpp"

namespace radpair::test {

inline Matrix random_matrix(Eigen::Index n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(Eigen::Index n, std::mt19937& rng) {
  const Matrix a = random_matrix(n, rng);
  return 0.5 * (a + a.adjoint());
}

// Random state on spin space + shelves with trace 1 and populated shelves.
inline DensityMatrix random_state(int spin_dim, std::mt19937& rng) {
  const Matrix a = random_matrix(spin_dim, rng);
  Matrix rho = Matrix::Zero(spin_dim + 2, spin_dim + 2);
  rho.topLeftCorner(spin_dim, spin_dim) = a * a.adjoint();
  rho(spin_dim, spin_dim) = 0.3 * rho.trace().real() / spin_dim;
  rho(spin_dim + 1, spin_dim + 1) = 0.7 * rho.trace().real() / spin_dim;
  rho /= rho.trace().real();
  return DensityMatrix(rho, spin_dim);
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace radpair::test

#pragma once

#include "radpair/types.hpp"

namespace radpair {

// Density matrix over the spin space followed by the two shelf levels |S>, |T>.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(Matrix rho, int spin_dim);

  const Matrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  int spin_dim() const { return spin_dim_; }
  int shelf_singlet_index() const { return spin_dim_; }
  int shelf_triplet_index() const { return spin_dim_ + 1; }

  Matrix spin_block() const { return rho_.topLeftCorner(spin_dim_, spin_dim_); }
  double shelf_singlet() const { return rho_(spin_dim_, spin_dim_).real(); }
  double shelf_triplet() const { return rho_(spin_dim_ + 1, spin_dim_ + 1).real(); }
  double spin_population() const { return spin_block().trace().real(); }
  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;
  double hermiticity_error() const;

 private:
  Matrix rho_;
  int spin_dim_ = 0;
};

}  // namespace radpair

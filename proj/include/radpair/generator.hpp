#pragma once

#include "radpair/channels.hpp"
#include "radpair/density_matrix.hpp"

namespace radpair {

// -i[H, rho] + sum_c rate_c (L_c rho L_c^dag - 1/2 {L_c^dag L_c, rho}).
// H is in rad/s and may be given on the spin space or on the full space.
Matrix generator_rhs(const Matrix& rho, const Matrix& h, const ChannelSet& channels);

/// Vectorized coordinates for states whose only non-zero shelf entries are
/// the two shelf populations (true for every state reachable from a state
/// with empty shelves). Layout: column-major vec of the spin block, then
/// p_S, p_T.
class LiouvilleLayout {
 public:
  explicit LiouvilleLayout(int spin_dim) : spin_dim_(spin_dim) {}

  int spin_dim() const { return spin_dim_; }
  Eigen::Index spin_size() const { return Eigen::Index{spin_dim_} * spin_dim_; }
  Eigen::Index size() const { return spin_size() + 2; }
  Eigen::Index index(int row, int col) const { return row + Eigen::Index{col} * spin_dim_; }
  Eigen::Index shelf_singlet() const { return spin_size(); }
  Eigen::Index shelf_triplet() const { return spin_size() + 1; }

  Vector pack(const DensityMatrix& rho) const;
  DensityMatrix unpack(const Vector& x) const;

 private:
  int spin_dim_;
};

/// Master-equation generator in LiouvilleLayout coordinates:
///   dx/dt = (constant + cos(omega t + phase) * drive) x
struct Superoperator {
  SparseMatrix constant;
  SparseMatrix drive;          // -i[H_drive, .]
  Matrix drive_hamiltonian;    // H_drive on the spin space; empty when static
  bool driven = false;
};

// `h_static` and `h_drive` are spin-space operators in rad/s; `h_drive` may be
// empty (static problem). Channels must either map spin to spin or spin to
// shelves; anything touching shelf columns is rejected.
Superoperator build_superoperator(const Matrix& h_static, const Matrix& h_drive,
                                  const ChannelSet& channels, const LiouvilleLayout& layout);

}  // namespace radpair

#include "radpair/generator.hpp"

#include <string>

#include "radpair/errors.hpp"
#include "radpair/hamiltonian.hpp"

namespace radpair {

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

constexpr double kStructuralZero = 0.0;

void add_left(Triplets& t, const Matrix& a, Complex coeff, const LiouvilleLayout& lay) {
  // X -> coeff * A X
  const int n = lay.spin_dim();
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < n; ++p) {
      const Complex v = coeff * a(i, p);
      if (std::abs(v) == kStructuralZero) continue;
      for (int j = 0; j < n; ++j) t.emplace_back(lay.index(i, j), lay.index(p, j), v);
    }
  }
}

void add_right(Triplets& t, const Matrix& b, Complex coeff, const LiouvilleLayout& lay) {
  // X -> coeff * X B
  const int n = lay.spin_dim();
  for (int q = 0; q < n; ++q) {
    for (int j = 0; j < n; ++j) {
      const Complex v = coeff * b(q, j);
      if (std::abs(v) == kStructuralZero) continue;
      for (int i = 0; i < n; ++i) t.emplace_back(lay.index(i, j), lay.index(i, q), v);
    }
  }
}

void add_sandwich(Triplets& t, const Matrix& l, double rate, const LiouvilleLayout& lay) {
  // X -> rate * L X L^dag ; (L X L^dag)_ij = sum_pq L_ip X_pq conj(L_jq)
  const int n = lay.spin_dim();
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      if (std::abs(l(i, p)) != kStructuralZero) nz.emplace_back(i, p);
  for (const auto& [i, p] : nz) {
    for (const auto& [j, q] : nz) {
      t.emplace_back(lay.index(i, j), lay.index(p, q), rate * l(i, p) * std::conj(l(j, q)));
    }
  }
}

void add_commutator(Triplets& t, const Matrix& h, const LiouvilleLayout& lay) {
  const Complex mi(0.0, -1.0);
  add_left(t, h, mi, lay);
  add_right(t, h, -mi, lay);
}

SparseMatrix assemble(const Triplets& t, Eigen::Index size) {
  SparseMatrix m(size, size);
  m.setFromTriplets(t.begin(), t.end());
  m.prune(Complex(0.0, 0.0), 0.0);
  m.makeCompressed();
  return m;
}

}  // namespace

Matrix generator_rhs(const Matrix& rho, const Matrix& h, const ChannelSet& channels) {
  const Matrix hf = h.rows() == rho.rows() ? h : extend_to_shelves(h);
  if (hf.rows() != rho.rows()) {
    throw DimensionError("generator_rhs: Hamiltonian dimension does not match the state");
  }
  const Complex mi(0.0, -1.0);
  Matrix out = mi * (hf * rho - rho * hf);
  for (const auto& c : channels) {
    if (c.rate == 0.0) continue;
    const Matrix ldl = c.op.adjoint() * c.op;
    out += c.rate * (c.op * rho * c.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

Vector LiouvilleLayout::pack(const DensityMatrix& rho) const {
  if (rho.spin_dim() != spin_dim_) throw DimensionError("pack: spin dimension mismatch");
  Vector x(size());
  const Matrix& m = rho.matrix();
  for (int j = 0; j < spin_dim_; ++j)
    for (int i = 0; i < spin_dim_; ++i) x(index(i, j)) = m(i, j);
  x(shelf_singlet()) = m(spin_dim_, spin_dim_);
  x(shelf_triplet()) = m(spin_dim_ + 1, spin_dim_ + 1);
  return x;
}

DensityMatrix LiouvilleLayout::unpack(const Vector& x) const {
  if (x.size() != size()) throw DimensionError("unpack: vector size mismatch");
  Matrix m = Matrix::Zero(spin_dim_ + 2, spin_dim_ + 2);
  for (int j = 0; j < spin_dim_; ++j)
    for (int i = 0; i < spin_dim_; ++i) m(i, j) = x(index(i, j));
  m(spin_dim_, spin_dim_) = x(shelf_singlet());
  m(spin_dim_ + 1, spin_dim_ + 1) = x(shelf_triplet());
  return DensityMatrix(std::move(m), spin_dim_);
}

Superoperator build_superoperator(const Matrix& h_static, const Matrix& h_drive,
                                  const ChannelSet& channels, const LiouvilleLayout& layout) {
  const int n = layout.spin_dim();
  if (h_static.rows() != n || h_static.cols() != n) {
    throw DimensionError("build_superoperator: Hamiltonian must be on the spin space");
  }
  Triplets constant;
  add_commutator(constant, h_static, layout);

  for (const auto& c : channels) {
    if (c.op.rows() != n + 2 || c.op.cols() != n + 2) {
      throw DimensionError("channel '" + c.label + "' must act on the full space");
    }
    if (c.rate == 0.0) continue;
    if (c.op.rightCols(2).cwiseAbs().maxCoeff() != 0.0) {
      throw DimensionError("channel '" + c.label + "' acts on shelf levels");
    }
    const Matrix spin_part = c.op.topLeftCorner(n, n);
    const Matrix shelf_part = c.op.bottomLeftCorner(2, n);
    const bool to_spin = spin_part.cwiseAbs().maxCoeff() != 0.0;
    const bool to_shelf = shelf_part.cwiseAbs().maxCoeff() != 0.0;
    if (to_spin && to_shelf) {
      throw DimensionError("channel '" + c.label + "' mixes spin and shelf outputs");
    }
    const Matrix& l = to_shelf ? shelf_part : spin_part;
    const Matrix ldl = l.adjoint() * l;
    add_left(constant, ldl, Complex(-0.5 * c.rate, 0.0), layout);
    add_right(constant, ldl, Complex(-0.5 * c.rate, 0.0), layout);
    if (to_spin) {
      add_sandwich(constant, spin_part, c.rate, layout);
    } else {
      // (L X L^dag) on the shelf diagonal: sum_pq L_sp X_pq conj(L_sq).
      for (int s = 0; s < 2; ++s) {
        const auto row = s == 0 ? layout.shelf_singlet() : layout.shelf_triplet();
        for (int p = 0; p < n; ++p) {
          if (shelf_part(s, p) == Complex(0.0)) continue;
          for (int q = 0; q < n; ++q) {
            if (shelf_part(s, q) == Complex(0.0)) continue;
            constant.emplace_back(row, layout.index(p, q),
                                  c.rate * shelf_part(s, p) * std::conj(shelf_part(s, q)));
          }
        }
      }
    }
  }

  Superoperator out;
  out.constant = assemble(constant, layout.size());
  if (h_drive.size() != 0) {
    if (h_drive.rows() != n || h_drive.cols() != n) {
      throw DimensionError("build_superoperator: drive must be on the spin space");
    }
    Triplets drive;
    add_commutator(drive, h_drive, layout);
    out.drive = assemble(drive, layout.size());
    out.drive_hamiltonian = h_drive;
    out.driven = out.drive.nonZeros() > 0;
  } else {
    out.drive = SparseMatrix(layout.size(), layout.size());
  }
  return out;
}

}  // namespace radpair

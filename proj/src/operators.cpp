#include "radpair/operators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "radpair/errors.hpp"

namespace radpair {

Matrix pauli(Axis axis) {
  Matrix s = Matrix::Zero(2, 2);
  switch (axis) {
    case Axis::x:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case Axis::y:
      s(0, 1) = Complex(0.0, -1.0);
      s(1, 0) = Complex(0.0, 1.0);
      break;
    case Axis::z:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed(const Matrix& op, std::size_t slot, std::span<const int> dims) {
  if (slot >= dims.size()) {
    throw DimensionError("embed: slot " + std::to_string(slot) + " out of range for " +
                         std::to_string(dims.size()) + " factors");
  }
  if (op.rows() != dims[slot] || op.cols() != dims[slot]) {
    throw DimensionError("embed: operator of dimension " + std::to_string(op.rows()) +
                         " does not match slot dimension " + std::to_string(dims[slot]));
  }
  Eigen::Index left = 1;
  for (std::size_t i = 0; i < slot; ++i) left *= dims[i];
  Eigen::Index right = 1;
  for (std::size_t i = slot + 1; i < dims.size(); ++i) right *= dims[i];
  return kron(kron(identity(left), op), identity(right));
}

SingletTriplet singlet_triplet_states() {
  const double r = 1.0 / std::sqrt(2.0);
  // |up up>, |up down>, |down up>, |down down>
  SingletTriplet st;
  st.singlet = Vector::Zero(4);
  st.singlet(1) = r;
  st.singlet(2) = -r;
  st.t0 = Vector::Zero(4);
  st.t0(1) = r;
  st.t0(2) = r;
  st.t_plus = Vector::Unit(4, 0);
  st.t_minus = Vector::Unit(4, 3);
  return st;
}

double hermiticity_error(const Matrix& h) {
  const double scale = h.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace radpair

#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace radpair {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace radpair

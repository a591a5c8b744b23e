#include "radpair/propagator.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace radpair {

Propagator::Propagator(const Superoperator& generator, double omega, double phase, double dt,
                       Method method)
    : generator_(generator), omega_(omega), phase_(phase), dt_(dt), method_(method) {
  if (method_ != Method::expm_piecewise) return;
  const Matrix c = Matrix(generator_.constant);
  full_exponential_ = (dt_ * c).exp();
  if (generator_.driven) {
    half_exponential_ = (0.5 * dt_ * c).exp();
    spin_dim_ = static_cast<int>(generator_.drive_hamiltonian.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(generator_.drive_hamiltonian);
    drive_vectors_ = eig.eigenvectors();
    drive_values_ = eig.eigenvalues();
  }
}

Matrix Propagator::apply(const Matrix& x, double t) const {
  Matrix out = generator_.constant * x;
  if (generator_.driven) out += std::cos(omega_ * t + phase_) * (generator_.drive * x);
  return out;
}

void Propagator::rotate(Matrix& x, double t_mid) const {
  const double angle = std::cos(omega_ * t_mid + phase_) * dt_;
  Eigen::VectorXcd phases(drive_values_.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::polar(1.0, -angle * drive_values_(i));
  }
  const Matrix u = drive_vectors_ * phases.asDiagonal() * drive_vectors_.adjoint();
  const Matrix u_dag = u.adjoint();
  const int n = spin_dim_;
  Matrix tmp(n, n);
  for (Eigen::Index col = 0; col < x.cols(); ++col) {
    Eigen::Map<Matrix> block(x.col(col).data(), n, n);
    tmp.noalias() = u * block;
    block.noalias() = tmp * u_dag;
  }
}

void Propagator::step(Matrix& x, double t) const {
  if (method_ == Method::expm_piecewise) {
    if (!generator_.driven) {
      x = full_exponential_ * x;
      return;
    }
    x = half_exponential_ * x;
    rotate(x, t + 0.5 * dt_);
    x = half_exponential_ * x;
    return;
  }
  const double h = dt_;
  const Matrix k1 = apply(x, t);
  const Matrix k2 = apply(x + 0.5 * h * k1, t + 0.5 * h);
  const Matrix k3 = apply(x + 0.5 * h * k2, t + 0.5 * h);
  const Matrix k4 = apply(x + h * k3, t + h);
  x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Matrix Propagator::block_map(double t0, long steps) const {
  const Eigen::Index n = size();
  if (!generator_.driven) {
    Matrix one = Matrix::Identity(n, n);
    step(one, t0);
    // Binary powering of the one-step map.
    Matrix result = Matrix::Identity(n, n);
    Matrix base = one;
    for (long e = steps; e > 0; e >>= 1) {
      if (e & 1) result = base * result;
      if (e > 1) base = base * base;
    }
    return result;
  }
  Matrix u = Matrix::Identity(n, n);
  if (method_ == Method::expm_piecewise && steps > 0) {
    // Adjacent half steps merge into one full static exponential.
    u = half_exponential_;
    for (long s = 0; s < steps; ++s) {
      rotate(u, t0 + (static_cast<double>(s) + 0.5) * dt_);
      u = (s + 1 < steps ? full_exponential_ : half_exponential_) * u;
    }
    return u;
  }
  for (long s = 0; s < steps; ++s) step(u, t0 + static_cast<double>(s) * dt_);
  return u;
}

}  // namespace radpair

#pragma once

#include "radpair/generator.hpp"

namespace radpair {

/// rk4_fixed: classical Runge-Kutta on the full generator.
/// expm_piecewise: exact exponential of the static generator; with a drive,
///   the symmetric split exp(C h/2) U(t_mid) exp(C h/2), where U(t_mid) is the
///   unitary rotation of the drive Hamiltonian over the step. Every factor is
///   completely positive, so positivity holds at any dt.
enum class Method { rk4_fixed, expm_piecewise };

/// Fixed-step integrator for dx/dt = (C + cos(omega t + phase) D) x.
///
/// Steps act identically on single vectors and on blocks of columns, so the
/// product of steps over an interval (a block map) reproduces step-by-step
/// integration up to rounding. For a driven generator, block maps over whole
/// drive periods are time-translation invariant.
class Propagator {
 public:
  // Keeps a reference to `generator`, which must outlive the propagator.
  Propagator(const Superoperator& generator, double omega, double phase, double dt, Method method);

  double dt() const { return dt_; }
  Eigen::Index size() const { return generator_.constant.rows(); }

  // Advances every column of `x` by one step starting at time t.
  void step(Matrix& x, double t) const;

  // Map of `steps` consecutive steps starting at time t0.
  Matrix block_map(double t0, long steps) const;

 private:
  Matrix apply(const Matrix& x, double t) const;
  // x -> U x U^dag on the spin block of every column, U = exp(-i c dt H_drive).
  void rotate(Matrix& x, double t_mid) const;

  const Superoperator& generator_;
  double omega_;
  double phase_;
  double dt_;
  Method method_;
  int spin_dim_ = 0;
  Matrix full_exponential_;  // exp(C dt)
  Matrix half_exponential_;  // exp(C dt / 2), driven only
  Matrix drive_vectors_;
  Eigen::VectorXd drive_values_;
};

}  // namespace radpair

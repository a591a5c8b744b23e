#include "radpair/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "radpair/errors.hpp"
#include "radpair/operators.hpp"

namespace radpair {

Matrix electron_state(const DensityMatrix& rho) {
  const Matrix spin = rho.spin_block();
  const Eigen::Index nuc = spin.rows() / 4;
  Matrix out = Matrix::Zero(4, 4);
  for (Eigen::Index n = 0; n < nuc; ++n) out += spin.block(4 * n, 4 * n, 4, 4);
  return out;
}

double singlet_probability(const DensityMatrix& rho) {
  const Vector s = singlet_triplet_states().singlet;
  return (s.adjoint() * electron_state(rho) * s)(0, 0).real();
}

YieldIntegral yield_integral(const Trajectory& traj, double k, YieldIntegralMode mode,
                             double max_tail) {
  const auto& t = traj.times;
  const auto& p = traj.singlet_probability;
  if (t.size() < 2 || p.size() != t.size()) {
    throw SolverError("yield_integral: trajectory needs at least two samples");
  }
  auto integrand = [&](std::size_t i) {
    return mode == YieldIntegralMode::coherent ? k * std::exp(-k * t[i]) * p[i] : k * p[i];
  };
  YieldIntegral out;
  for (std::size_t i = 1; i < t.size(); ++i) {
    out.value += 0.5 * (t[i] - t[i - 1]) * (integrand(i - 1) + integrand(i));
  }
  // Singlet probability is bounded by the surviving spin population.
  out.tail_bound = mode == YieldIntegralMode::coherent ? std::exp(-k * t.back())
                                                       : traj.spin_population.back();
  if (out.tail_bound > max_tail) {
    std::ostringstream os;
    os << "trajectory too short: tail bound " << out.tail_bound << " exceeds " << max_tail;
    throw SolverError(os.str());
  }
  return out;
}

NegativityConvention parse_negativity_convention(const std::string& name) {
  if (name == "standard") return NegativityConvention::standard;
  if (name == "paper") return NegativityConvention::paper;
  throw ValidationError("negativity.convention",
                        "unknown convention '" + name + "' (expected standard, paper)");
}

std::string to_string(NegativityConvention convention) {
  return convention == NegativityConvention::paper ? "paper" : "standard";
}

double negativity_of_block(const Matrix& block, NegativityConvention convention) {
  const Eigen::Index n = block.rows();
  if (n < 4 || n % 2 != 0 || block.cols() != n) {
    throw DimensionError("negativity: spin block must be square with an even dimension");
  }
  // Index = 2 a + e with e the free electron; transpose e <-> e'.
  const Eigen::Index rest = n / 2;
  Matrix pt(n, n);
  for (Eigen::Index a = 0; a < rest; ++a)
    for (Eigen::Index b = 0; b < rest; ++b)
      for (int e = 0; e < 2; ++e)
        for (int f = 0; f < 2; ++f) pt(2 * a + e, 2 * b + f) = block(2 * a + f, 2 * b + e);
  // pt is Hermitian, so its trace norm is the sum of |eigenvalues|.
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  if (convention == NegativityConvention::paper) return 0.5 * lambda.cwiseAbs().sum();
  double negative = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -kNegativityZeroTolerance) negative -= lambda(i);
  }
  return negative;
}

double negativity(const DensityMatrix& rho, NegativityConvention convention, bool renormalize) {
  Matrix block = rho.spin_block();
  if (renormalize) {
    const double tr = block.trace().real();
    if (!(tr > 0.0)) return 0.0;
    block /= tr;
  }
  return negativity_of_block(block, convention);
}

double contrast(const std::vector<YieldPoint>& sweep) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& p : sweep) {
    if (!p.ok) continue;
    lo = std::min(lo, p.phi_s);
    hi = std::max(hi, p.phi_s);
  }
  if (hi < lo) throw Error("contrast: sweep has no successful points");
  return hi - lo;
}

double rf_disruption(const std::vector<YieldPoint>& off, const std::vector<YieldPoint>& on) {
  if (off.size() != on.size()) throw Error("rf_disruption: angle grids differ in length");
  double d = 0.0;
  for (std::size_t i = 0; i < off.size(); ++i) {
    if (std::abs(off[i].theta - on[i].theta) > 1e-12) {
      throw Error("rf_disruption: angle grids differ at index " + std::to_string(i));
    }
    if (!off[i].ok || !on[i].ok) continue;
    d = std::max(d, std::abs(on[i].phi_s - off[i].phi_s));
  }
  return d;
}

}  // namespace radpair

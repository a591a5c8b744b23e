#pragma once

#include <string>
#include <vector>

#include "radpair/density_matrix.hpp"
#include "radpair/solver.hpp"

namespace radpair {

// Electron singlet probability: trace out the nuclei, ignore the shelves.
double singlet_probability(const DensityMatrix& rho);

// 4x4 electron-pair state Tr_n(spin block); not renormalized.
Matrix electron_state(const DensityMatrix& rho);

enum class YieldIntegralMode {
  coherent,        // decay-free trajectory, weighted by k exp(-k t)
  master_equation  // trajectory of the full master equation (decay already in the state)
};

struct YieldIntegral {
  double value = 0.0;
  double tail_bound = 0.0;  // upper bound on the truncated part beyond the last sample
};

// Trapezoidal quadrature of the singlet-yield integral over the trajectory's
// samples. Throws SolverError if tail_bound exceeds `max_tail`.
YieldIntegral yield_integral(const Trajectory& traj, double k, YieldIntegralMode mode,
                             double max_tail = 1.0e-4);

enum class NegativityConvention {
  standard,  // (||rho^T_A||_1 - tr rho) / 2
  paper      // ||rho^T_A||_1 / 2
};

NegativityConvention parse_negativity_convention(const std::string& name);
std::string to_string(NegativityConvention convention);

// Partial transpose over the free electron (last tensor slot) of the spin block;
// the shelves are dropped. With `renormalize` the block is divided by its trace first.
double negativity(const DensityMatrix& rho, NegativityConvention convention,
                  bool renormalize = false);

// Eigenvalues of the partial transpose within this of zero count as zero, so a
// separable state has standard negativity exactly 0.
inline constexpr double kNegativityZeroTolerance = 1.0e-13;

// Same, directly on a spin-space matrix.
double negativity_of_block(const Matrix& spin_block, NegativityConvention convention);

struct YieldPoint {
  double theta = 0.0;
  double phi_s = 0.0;
  double phi_t = 0.0;
  bool ok = true;
  std::string error;    // set when !ok
  std::string method;   // solver path used
};

// max phi_s - min phi_s over the successful points; throws on an empty sweep.
double contrast(const std::vector<YieldPoint>& sweep);

// max over angles |phi_s_on - phi_s_off|; the grids must coincide.
double rf_disruption(const std::vector<YieldPoint>& sweep_off, const std::vector<YieldPoint>& sweep_on);

}  // namespace radpair

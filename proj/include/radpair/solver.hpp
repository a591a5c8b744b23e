#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radpair/channels.hpp"
#include "radpair/density_matrix.hpp"
#include "radpair/field.hpp"
#include "radpair/hamiltonian.hpp"
#include "radpair/propagator.hpp"

namespace radpair {

struct SolverOptions {
  double dt = 1.0e-8;             // s
  double t_max = 0.0;             // s; 0 selects 12 / k
  double residual_eps = 1.0e-4;   // stop once unabsorbed population drops below this
  Method method = Method::expm_piecewise;
  bool store_trajectory = false;  // keep full states at every sample
  int trajectory_stride = 100;    // steps between samples
  int rf_phase_samples = 1;       // > 1 averages over uniformly spaced rf phases
  bool step_halving_check = false;
  bool require_convergence = true;

  double resolved_t_max(double k) const { return t_max > 0.0 ? t_max : 12.0 / k; }
  void validate() const;
};

Method parse_method(const std::string& name);
std::string to_string(Method method);

// Highest frequency (Hz) among the hyperfine couplings, the Zeeman splittings
// and the rf drive; dt must not exceed 1 / (20 * max_frequency).
double max_frequency(const ModelSpec& m, const FieldSpec& f);

struct Trajectory {
  std::vector<double> times;
  std::vector<double> shelf_s;
  std::vector<double> shelf_t;
  std::vector<double> spin_population;
  std::vector<double> singlet_probability;  // <s| Tr_n(spin block) |s>, unnormalized
  std::vector<double> trace;
  std::vector<double> min_eigenvalue;
  std::vector<DensityMatrix> states;  // only with store_trajectory

  double phi_s = 0.0;  // shelf populations at termination
  double phi_t = 0.0;
  double residual = 0.0;
  bool converged = false;
  double dt_used = 0.0;
  long steps = 0;
  std::optional<double> halving_delta;  // |phi_s(dt) - phi_s(dt/2)|
};

/// Integrates the master equation with H(t) = hamiltonian(m, field_at(f, t)).
///
/// With an rf field the step is shrunk to the largest T/N <= dt (T the rf
/// period) and samples fall on whole periods, which lets one-period maps be
/// reused; a run that reaches t_max takes its last sample there. Throws PositivityError if a sample has an eigenvalue below -1e-6 and
/// ConvergenceError if the residual is still above residual_eps at t_max
/// (decay enabled, require_convergence set).
Trajectory evolve(const DensityMatrix& rho0, const ModelSpec& m, const FieldSpec& f,
                  const SolverOptions& opts, const ChannelFlags& flags = {});

struct Yields {
  double singlet = 0.0;
  double triplet = 0.0;
  double dt_used = 0.0;
};

// Time-integrated spin state from one linear solve of the static generator.
Yields yield_direct(const ModelSpec& m, const FieldSpec& f, InitialKind kind,
                    const ChannelFlags& flags = {});

// Infinite-horizon yields of the fixed-step integrator: the map over one rf
// period (or a block of steps when static) is summed as a geometric series.
// Honors rf_phase_samples.
Yields yield_integrated(const ModelSpec& m, const FieldSpec& f, const SolverOptions& opts,
                        InitialKind kind, const ChannelFlags& flags = {});

}  // namespace radpair

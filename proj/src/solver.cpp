#include "radpair/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radpair/constants.hpp"
#include "radpair/errors.hpp"
#include "radpair/operators.hpp"

namespace radpair {

namespace {

constexpr double kPositivityAbort = -1.0e-6;
constexpr long kStaticClosureBlock = 64;

struct Problem {
  LiouvilleLayout layout;
  Superoperator generator;
  bool driven = false;
};

Problem build_problem(const ModelSpec& m, const FieldSpec& f, const ChannelFlags& flags) {
  const Vec3 b_static = f.static_field();
  const Matrix h0 = hamiltonian(m, b_static);
  Matrix drive;
  if (f.has_rf()) drive = zeeman_hamiltonian(m, f.rf_amplitude());
  const ChannelSet channels = build_channels(m, b_static, flags);
  LiouvilleLayout layout(m.spin_dim());
  Problem p{layout, build_superoperator(h0, drive, channels, layout), f.has_rf()};
  return p;
}

void check_step(const ModelSpec& m, const FieldSpec& f, double dt) {
  const double limit = 1.0 / (20.0 * max_frequency(m, f));
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt = " << dt << " s does not resolve the fastest frequency; need dt <= " << limit << " s";
    throw ValidationError("solver.dt_seconds", os.str());
  }
}

// Steps per rf period: the smallest multiple of `multiple` with T/N <= dt.
long steps_per_period(double period, double dt, long multiple) {
  const long blocks = static_cast<long>(std::ceil(period / (dt * static_cast<double>(multiple)) - 1e-9));
  return std::max(1L, blocks) * multiple;
}

// Linear functional w with w . x = tr(op * spin block).
Eigen::RowVectorXcd spin_functional(const Matrix& op, const LiouvilleLayout& lay) {
  Eigen::RowVectorXcd w = Eigen::RowVectorXcd::Zero(lay.size());
  for (int i = 0; i < lay.spin_dim(); ++i)
    for (int j = 0; j < lay.spin_dim(); ++j) w(lay.index(i, j)) = op(j, i);
  return w;
}

Matrix singlet_projector(const ModelSpec& m) {
  const auto st = singlet_triplet_states();
  return kron(identity(Eigen::Index{1} << m.nucleus_count()), st.singlet * st.singlet.adjoint());
}

Yields close_geometric_series(const Matrix& u, const Vector& x0, const LiouvilleLayout& lay) {
  const Eigen::Index d = lay.spin_size();
  const Matrix q = u.topLeftCorner(d, d);
  const Matrix feed = u.block(d, 0, 2, d);
  Eigen::PartialPivLU<Matrix> lu(Matrix::Identity(d, d) - q);
  const Vector absorbed = feed * lu.solve(x0.head(d));
  Yields y;
  y.singlet = (x0(lay.shelf_singlet()) + absorbed(0)).real();
  y.triplet = (x0(lay.shelf_triplet()) + absorbed(1)).real();
  if (!std::isfinite(y.singlet) || !std::isfinite(y.triplet)) {
    throw SingularSystemError("yield summation diverged; is the decay rate zero?");
  }
  return y;
}

Trajectory evolve_single_phase(const DensityMatrix& rho0, const ModelSpec& m, const FieldSpec& f,
                               const SolverOptions& opts, const ChannelFlags& flags) {
  const Problem problem = build_problem(m, f, flags);
  const LiouvilleLayout& lay = problem.layout;

  double h = opts.dt;
  long sample_steps = opts.trajectory_stride;
  if (problem.driven) {
    const long n = steps_per_period(f.period(), opts.dt, 1);
    h = f.period() / static_cast<double>(n);
    const long periods = std::max(1L, (opts.trajectory_stride + n - 1) / n);
    sample_steps = periods * n;
  }
  const double t_max = opts.resolved_t_max(m.k);
  const long total_steps = static_cast<long>(std::ceil(t_max / h - 1e-9));

  const Propagator prop(problem.generator, f.omega, f.rf_phase, h, opts.method);
  Matrix sample_map;
  if (problem.driven) {
    const long n = std::lround(f.period() / h);
    const Matrix period_map = prop.block_map(0.0, n);
    sample_map = Matrix::Identity(lay.size(), lay.size());
    for (long p = 0; p < sample_steps / n; ++p) sample_map = period_map * sample_map;
  } else {
    sample_map = prop.block_map(0.0, sample_steps);
  }

  const Eigen::RowVectorXcd singlet_w = spin_functional(singlet_projector(m), lay);
  const Eigen::RowVectorXcd trace_w = spin_functional(identity(m.spin_dim()), lay);

  Trajectory traj;
  traj.dt_used = h;
  Matrix x = lay.pack(rho0);
  double lowest = 0.0;

  auto record = [&](long step) {
    const double t = static_cast<double>(step) * h;
    const DensityMatrix rho = lay.unpack(x.col(0));
    const double pop = (trace_w * x.col(0))(0).real();
    const double ps = x(lay.shelf_singlet(), 0).real();
    const double pt = x(lay.shelf_triplet(), 0).real();
    const double min_eig = rho.min_eigenvalue();
    lowest = std::min(lowest, min_eig);
    if (min_eig < kPositivityAbort) {
      std::ostringstream os;
      os << "positivity violated at t = " << t << " s: min eigenvalue " << min_eig
         << " (dt = " << h << " s)";
      throw PositivityError(t, min_eig, os.str());
    }
    traj.times.push_back(t);
    traj.shelf_s.push_back(ps);
    traj.shelf_t.push_back(pt);
    traj.spin_population.push_back(pop);
    traj.singlet_probability.push_back((singlet_w * x.col(0))(0).real());
    traj.trace.push_back(pop + ps + pt);
    traj.min_eigenvalue.push_back(min_eig);
    if (opts.store_trajectory) traj.states.push_back(rho);
  };

  record(0);
  long done = 0;
  bool converged = false;
  while (done < total_steps) {
    if (done + sample_steps <= total_steps) {
      x = sample_map * x;
      done += sample_steps;
    } else {
      for (; done < total_steps; ++done) prop.step(x, static_cast<double>(done) * h);
    }
    record(done);
    if (flags.decay && 1.0 - (traj.shelf_s.back() + traj.shelf_t.back()) < opts.residual_eps) {
      converged = true;
      break;
    }
  }

  traj.steps = done;
  traj.phi_s = traj.shelf_s.back();
  traj.phi_t = traj.shelf_t.back();
  traj.residual = 1.0 - (traj.phi_s + traj.phi_t);
  traj.converged = converged || !flags.decay;
  return traj;
}

void accumulate(std::vector<double>& into, const std::vector<double>& from, double w) {
  if (into.empty()) into.assign(from.size(), 0.0);
  const std::size_t n = std::min(into.size(), from.size());
  into.resize(n);
  for (std::size_t i = 0; i < n; ++i) into[i] += w * from[i];
}

}  // namespace

void SolverOptions::validate() const {
  if (!(dt > 0.0)) throw ValidationError("solver.dt_seconds", "step size must be positive");
  if (t_max < 0.0) throw ValidationError("solver.t_max_seconds", "must be >= 0 (0 selects 12/k)");
  if (!(residual_eps > 0.0) || residual_eps >= 1.0) {
    throw ValidationError("solver.residual_eps", "must lie in (0, 1)");
  }
  if (trajectory_stride < 1) throw ValidationError("solver.trajectory_stride", "must be >= 1");
  if (rf_phase_samples < 1) throw ValidationError("field.rf_phase_samples", "must be >= 1");
}

Method parse_method(const std::string& name) {
  if (name == "rk4-fixed") return Method::rk4_fixed;
  if (name == "expm-piecewise") return Method::expm_piecewise;
  throw ValidationError("solver.method",
                        "unknown method '" + name + "' (expected rk4-fixed, expm-piecewise)");
}

std::string to_string(Method method) {
  return method == Method::rk4_fixed ? "rk4-fixed" : "expm-piecewise";
}

double max_frequency(const ModelSpec& m, const FieldSpec& f) {
  const double h_planck = 2.0 * kPi * PhysicalConstants::hbar;  // meV s
  double nu = 0.0;
  for (const auto& a : m.nuclei) nu = std::max(nu, a.max_abs() / h_planck);
  const double b_peak = std::abs(f.b0) + std::abs(f.b_rf);
  const double g = std::max(m.g1.max_abs(), m.g2.max_abs());
  nu = std::max(nu, g * PhysicalConstants::bohr_magneton * b_peak / h_planck);
  if (f.has_rf()) nu = std::max(nu, f.omega / (2.0 * kPi));
  return nu;
}

Trajectory evolve(const DensityMatrix& rho0, const ModelSpec& m, const FieldSpec& f,
                  const SolverOptions& opts, const ChannelFlags& flags) {
  m.validate();
  opts.validate();
  if (rho0.spin_dim() != m.spin_dim()) {
    throw DimensionError("initial state does not match the model's spin dimension");
  }
  check_step(m, f, opts.dt);

  Trajectory traj;
  if (f.has_rf() && opts.rf_phase_samples > 1) {
    const int samples = opts.rf_phase_samples;
    const double w = 1.0 / samples;
    SolverOptions single = opts;
    single.rf_phase_samples = 1;
    single.step_halving_check = false;
    std::vector<Trajectory> runs;
    for (int j = 0; j < samples; ++j) {
      FieldSpec shifted = f;
      shifted.rf_phase = f.rf_phase + 2.0 * kPi * j / samples;
      runs.push_back(evolve_single_phase(rho0, m, shifted, single, flags));
    }
    std::size_t n = runs.front().times.size();
    for (const auto& r : runs) n = std::min(n, r.times.size());
    traj.times.assign(runs.front().times.begin(), runs.front().times.begin() + static_cast<long>(n));
    traj.converged = true;
    traj.dt_used = runs.front().dt_used;
    for (const auto& r : runs) {
      accumulate(traj.shelf_s, r.shelf_s, w);
      accumulate(traj.shelf_t, r.shelf_t, w);
      accumulate(traj.spin_population, r.spin_population, w);
      accumulate(traj.singlet_probability, r.singlet_probability, w);
      accumulate(traj.trace, r.trace, w);
      traj.converged = traj.converged && r.converged;
      traj.steps = std::max(traj.steps, r.steps);
    }
    traj.shelf_s.resize(n);
    traj.shelf_t.resize(n);
    traj.spin_population.resize(n);
    traj.singlet_probability.resize(n);
    traj.trace.resize(n);
    if (opts.store_trajectory) {
      for (std::size_t i = 0; i < n; ++i) {
        Matrix avg = Matrix::Zero(rho0.dim(), rho0.dim());
        for (const auto& r : runs) avg += w * r.states[i].matrix();
        traj.states.emplace_back(std::move(avg), rho0.spin_dim());
      }
    }
    // The average of positive states is positive; report the weakest run's bound.
    traj.min_eigenvalue.assign(n, 0.0);
    for (const auto& r : runs)
      for (std::size_t i = 0; i < n; ++i)
        traj.min_eigenvalue[i] = std::min(traj.min_eigenvalue[i], r.min_eigenvalue[i]);
    traj.phi_s = traj.shelf_s.back();
    traj.phi_t = traj.shelf_t.back();
    traj.residual = 1.0 - (traj.phi_s + traj.phi_t);
  } else {
    traj = evolve_single_phase(rho0, m, f, opts, flags);
  }

  if (flags.decay && opts.require_convergence && !traj.converged) {
    std::ostringstream os;
    os << "unabsorbed population " << traj.residual << " exceeds residual_eps "
       << opts.residual_eps << " at t_max = " << opts.resolved_t_max(m.k) << " s";
    throw ConvergenceError(traj.residual, os.str());
  }

  if (opts.step_halving_check) {
    SolverOptions half = opts;
    half.dt = opts.dt / 2.0;
    half.step_halving_check = false;
    half.store_trajectory = false;
    // Keep sample times, and hence the termination time, aligned with the main run.
    if (!f.has_rf()) half.trajectory_stride = opts.trajectory_stride * 2;
    const Trajectory fine = evolve(rho0, m, f, half, flags);
    traj.halving_delta = std::abs(fine.phi_s - traj.phi_s);
  }
  return traj;
}

Yields yield_direct(const ModelSpec& m, const FieldSpec& f, InitialKind kind,
                    const ChannelFlags& flags) {
  m.validate();
  if (f.has_rf()) {
    throw ValidationError("field.b_rf_tesla",
                          "the linear-solve yield requires a static field; integrate instead");
  }
  const Problem problem = build_problem(m, f, flags);
  const LiouvilleLayout& lay = problem.layout;
  const Eigen::Index d = lay.spin_size();
  const Matrix l = Matrix(problem.generator.constant);
  Eigen::FullPivLU<Matrix> lu(l.topLeftCorner(d, d));
  if (!lu.isInvertible()) {
    throw SingularSystemError("spin-space generator is singular; the decay rate must be positive");
  }
  const Vector x0 = lay.pack(initial_state(m, kind));
  // Integral over all time of the spin block: -L^{-1} x0.
  const Vector integrated = lu.solve(-x0.head(d));
  const Vector absorbed = l.block(d, 0, 2, d) * integrated;
  Yields y;
  y.singlet = (x0(lay.shelf_singlet()) + absorbed(0)).real();
  y.triplet = (x0(lay.shelf_triplet()) + absorbed(1)).real();
  return y;
}

Yields yield_integrated(const ModelSpec& m, const FieldSpec& f, const SolverOptions& opts,
                        InitialKind kind, const ChannelFlags& flags) {
  m.validate();
  opts.validate();
  check_step(m, f, opts.dt);
  if (!flags.decay) {
    throw SingularSystemError("yields need the decay channels; nothing is ever absorbed");
  }
  const Problem problem = build_problem(m, f, flags);
  const LiouvilleLayout& lay = problem.layout;
  const Vector x0 = lay.pack(initial_state(m, kind));

  if (!problem.driven) {
    const Propagator prop(problem.generator, 0.0, 0.0, opts.dt, opts.method);
    Yields y = close_geometric_series(prop.block_map(0.0, kStaticClosureBlock), x0, lay);
    y.dt_used = opts.dt;
    return y;
  }

  // Phase j of P equals the base-phase evolution started j/P of a period late,
  // so every phase's period map is a cyclic product of the same P segments.
  const long phases = opts.rf_phase_samples;
  const long n = steps_per_period(f.period(), opts.dt, phases);
  const double h = f.period() / static_cast<double>(n);
  const long seg = n / phases;
  const Propagator prop(problem.generator, f.omega, f.rf_phase, h, opts.method);

  std::vector<Matrix> segments;
  segments.reserve(static_cast<std::size_t>(phases));
  for (long j = 0; j < phases; ++j) {
    segments.push_back(prop.block_map(static_cast<double>(j * seg) * h, seg));
  }
  const Eigen::Index size = lay.size();
  // suffix[j] = S_{P-1} ... S_j, prefix[j] = S_{j-1} ... S_0
  std::vector<Matrix> suffix(static_cast<std::size_t>(phases) + 1);
  suffix[static_cast<std::size_t>(phases)] = Matrix::Identity(size, size);
  for (long j = phases - 1; j >= 0; --j) {
    suffix[static_cast<std::size_t>(j)] =
        suffix[static_cast<std::size_t>(j + 1)] * segments[static_cast<std::size_t>(j)];
  }
  Matrix prefix = Matrix::Identity(size, size);
  Yields total;
  for (long j = 0; j < phases; ++j) {
    const Matrix period_map = prefix * suffix[static_cast<std::size_t>(j)];
    const Yields y = close_geometric_series(period_map, x0, lay);
    total.singlet += y.singlet / static_cast<double>(phases);
    total.triplet += y.triplet / static_cast<double>(phases);
    prefix = segments[static_cast<std::size_t>(j)] * prefix;
  }
  total.dt_used = h;
  return total;
}

}  // namespace radpair

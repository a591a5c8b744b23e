#include <doctest.h>

#include <cmath>
#include <limits>

#include "radpair/errors.hpp"
#include "radpair/observables.hpp"
#include "radpair/operators.hpp"
#include "support.hpp"

using namespace radpair;

namespace {

DensityMatrix electrons_only(const Matrix& rho4) {
  Matrix rho = Matrix::Zero(6, 6);
  rho.topLeftCorner(4, 4) = rho4;
  return DensityMatrix(rho, 4);
}

}  // namespace

TEST_CASE("negativity of the singlet start") {
  // The partial transpose of |s><s| (x) I/2 has spectrum {1/2 x 3, -1/2} per nuclear
  // state, times 1/2: trace norm 2, one negative eigenvalue -1/2 in total.
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  const DensityMatrix rho = initial_state(m, InitialKind::singlet);
  CHECK(std::abs(negativity(rho, NegativityConvention::standard) - 0.5) < 1e-10);
  CHECK(std::abs(negativity(rho, NegativityConvention::paper) - 1.0) < 1e-10);
}

TEST_CASE("negativity of separable states is exactly zero") {
  const auto st = singlet_triplet_states();
  const Vector up_down = (st.t0 + st.singlet) / std::sqrt(2.0);
  CHECK(negativity(electrons_only(up_down * up_down.adjoint()), NegativityConvention::standard) == 0.0);
  CHECK(negativity(electrons_only(0.25 * identity(4)), NegativityConvention::standard) == 0.0);
  // Equal singlet / triplet mixture is separable.
  const Matrix mix = 0.5 * (st.singlet * st.singlet.adjoint() + st.t0 * st.t0.adjoint());
  CHECK(negativity(electrons_only(mix), NegativityConvention::standard) == 0.0);
}

TEST_CASE("renormalized negativity divides out the surviving population") {
  const auto st = singlet_triplet_states();
  Matrix rho = Matrix::Zero(6, 6);
  rho.topLeftCorner(4, 4) = 0.25 * st.singlet * st.singlet.adjoint();
  rho(4, 4) = 0.75;
  const DensityMatrix d(rho, 4);
  CHECK(negativity(d, NegativityConvention::standard) == doctest::Approx(0.125));
  CHECK(negativity(d, NegativityConvention::standard, true) == doctest::Approx(0.5));
}

TEST_CASE("singlet probability and electron state") {
  const ModelSpec m = make_model(ModelPreset::two_nuclei, 1e4);
  const DensityMatrix s = initial_state(m, InitialKind::singlet);
  CHECK(singlet_probability(s) == doctest::Approx(1.0));
  CHECK(singlet_probability(initial_state(m, InitialKind::dephased)) == doctest::Approx(0.5));
  CHECK(electron_state(s).trace().real() == doctest::Approx(1.0));
}

TEST_CASE("yield integral matches the shelf yield without noise") {
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  FieldSpec f;
  f.theta_static = 0.6;
  const double direct = yield_direct(m, f, InitialKind::singlet).singlet;

  SolverOptions o;
  o.trajectory_stride = 1;
  o.t_max = 14.0 / m.k;
  o.require_convergence = false;
  const Trajectory coherent =
      evolve(initial_state(m, InitialKind::singlet), m, f, o, ChannelFlags{false, false, false});
  const YieldIntegral a = yield_integral(coherent, m.k, YieldIntegralMode::coherent);
  CHECK(std::abs(a.value - direct) < 1e-4);

  const Trajectory full = evolve(initial_state(m, InitialKind::singlet), m, f, o);
  const YieldIntegral b = yield_integral(full, m.k, YieldIntegralMode::master_equation);
  CHECK(std::abs(b.value - direct) < 1e-4);
  CHECK(b.tail_bound < 1e-4);
}

TEST_CASE("yield integral refuses a truncated trajectory") {
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  SolverOptions o;
  o.t_max = 2.0 / m.k;
  o.require_convergence = false;
  const Trajectory t = evolve(initial_state(m, InitialKind::singlet), m, FieldSpec{}, o);
  CHECK_THROWS_AS(yield_integral(t, m.k, YieldIntegralMode::master_equation), SolverError);
}

TEST_CASE("contrast and disruption") {
  std::vector<YieldPoint> off = {{0.0, 0.3, 0.7}, {0.5, 0.35, 0.65}, {1.0, 0.32, 0.68}};
  CHECK(contrast(off) == doctest::Approx(0.05));
  CHECK(contrast({{0.0, 0.3, 0.7}}) == 0.0);
  auto on = off;
  on[1].phi_s = 0.33;
  CHECK(rf_disruption(off, on) == doctest::Approx(0.02));
  CHECK(rf_disruption(off, off) == 0.0);
  on[1].theta = 0.6;
  CHECK_THROWS(rf_disruption(off, on));
  CHECK_THROWS(contrast({}));
  auto gaps = off;
  gaps[1].ok = false;
  gaps[1].phi_s = std::numeric_limits<double>::quiet_NaN();
  CHECK(contrast(gaps) == doctest::Approx(0.02));
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "radpair/constants.hpp"
#include "radpair/errors.hpp"
#include "radpair/field.hpp"
#include "radpair/hamiltonian.hpp"
#include "radpair/operators.hpp"
#include "support.hpp"

using namespace radpair;
using radpair::test::max_abs;

namespace {

std::vector<double> sorted_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  std::vector<double> v(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("preset dimensions") {
  CHECK(make_model(ModelPreset::cigar, 1e4).spin_dim() == 8);
  CHECK(make_model(ModelPreset::cigar, 1e4).total_dim() == 10);
  CHECK(make_model(ModelPreset::two_nuclei, 1e4).total_dim() == 18);
  CHECK(make_model(ModelPreset::anisotropic_g, 1e4).spin_dim() == 4);
  CHECK(make_model(ModelPreset::disc, 1e4).nucleus_count() == 1);
}

TEST_CASE("cigar hyperfine spectrum") {
  // In the Bell basis XX, YY, ZZ are diagonal with signs (+-+), (-++), (++-), (---),
  // so ax XX + ay YY + az ZZ has eigenvalues az, az, 0, -2 az for ax = ay = az / 2.
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  const double a = PhysicalConstants::to_angular(1e-5);
  const std::vector<double> expected = {-2 * a, -2 * a, 0, 0, a, a, a, a};
  const auto got = sorted_eigenvalues(hyperfine_hamiltonian(m));
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).scale(a));
}

TEST_CASE("disc tensor puts its small principal value on the lab z axis") {
  const Mat3 lab = HyperfineTensor::disc().lab_frame();
  CHECK(lab(2, 2) == doctest::Approx(0.5e-5 / 6.0));
  CHECK(lab(0, 0) == doctest::Approx(0.5e-5));
  CHECK(lab(1, 1) == doctest::Approx(0.5e-5));
  CHECK((lab - lab.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("two-nucleus preset scales the second tensor by 2/3") {
  const ModelSpec m = make_model(ModelPreset::two_nuclei, 1e4);
  REQUIRE(m.nuclei.size() == 2);
  CHECK(m.nuclei[1].az == doctest::Approx(m.nuclei[0].az * 2.0 / 3.0));
}

TEST_CASE("model validation names the offending key") {
  ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  m.k = -1.0;
  try {
    m.validate();
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.key() == "model.k_per_second");
  }
  m.k = 1e4;
  m.gamma_noise = -1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.gamma_noise = 0.0;
  m.nuclei.resize(3);
  CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("resonance frequency for a 47 uT field is 1.316 MHz") {
  const double nu = FieldSpec::resonant_omega(47e-6) / (2.0 * kPi);
  CHECK(std::abs(nu - 1.316e6) / 1.316e6 < 1e-3);
}

TEST_CASE("meV and rad/s conversions round trip") {
  for (double e : {1e-5, 2.7e-3, 1.0}) {
    CHECK(PhysicalConstants::to_mev(PhysicalConstants::to_angular(e)) == doctest::Approx(e).epsilon(1e-15));
  }
}

TEST_CASE("Zeeman splitting of a free electron matches the resonance") {
  ModelSpec m = make_model(ModelPreset::none, 1e4);
  const Matrix h = zeeman_hamiltonian(m, Vec3(0, 0, 47e-6));
  const auto ev = sorted_eigenvalues(h);
  const double omega = FieldSpec::resonant_omega(47e-6);
  CHECK(ev.back() - ev.front() == doctest::Approx(2.0 * omega));  // both electrons flipped
  CHECK(ev[2] - ev[0] == doctest::Approx(omega));
}

TEST_CASE("singlet is a Zeeman eigenvector for isotropic g") {
  const ModelSpec m = make_model(ModelPreset::none, 1e4);
  const Vector s = singlet_triplet_states().singlet;
  for (double theta : {0.0, 0.3, 1.2}) {
    const Matrix h = zeeman_hamiltonian(m, 47e-6 * direction(theta, 0.4));
    CHECK(max_abs(h * s) < 1e-6);
  }
}

TEST_CASE("Hamiltonians are Hermitian and reject non-finite fields") {
  for (ModelPreset p : {ModelPreset::cigar, ModelPreset::disc, ModelPreset::anisotropic_g, ModelPreset::two_nuclei}) {
    const ModelSpec m = make_model(p, 1e4);
    const Matrix h = hamiltonian(m, 47e-6 * direction(0.7, 0.2));
    CHECK(hermiticity_error(h) < 1e-9 * max_abs(h));
  }
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  CHECK_THROWS(hamiltonian(m, Vec3(std::nan(""), 0, 0)));
}

TEST_CASE("subsystem Hamiltonians add up to the full Hamiltonian") {
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  const Vec3 b = 47e-6 * direction(0.9, 0.0);
  const auto sub = subsystem_hamiltonians(m, b);
  const Matrix sum = kron(sub.coupled, identity(2)) + kron(identity(sub.coupled.rows()), sub.remote);
  const Matrix h = hamiltonian(m, b);
  CHECK(max_abs(sum - h) < 1e-12 * max_abs(h));
}

TEST_CASE("field geometry") {
  FieldSpec f = FieldSpec::resonant_perpendicular(0.4);
  CHECK(f.has_rf());
  CHECK(f.static_field().dot(f.rf_amplitude()) == doctest::Approx(0.0).scale(1e-12));
  f.rf_orientation = RfOrientation::parallel;
  const FieldSpec p = f.at_angle(0.9);
  CHECK(p.static_field().normalized().dot(p.rf_amplitude().normalized()) == doctest::Approx(1.0));
  CHECK_FALSE(f.without_rf().has_rf());
  const Vec3 at_peak = field_at(f.at_angle(0.9), 0.0);
  CHECK((at_peak - p.static_field() - p.rf_amplitude()).norm() < 1e-18);
}

TEST_CASE("initial states") {
  const ModelSpec m = make_model(ModelPreset::cigar, 1e4);
  const DensityMatrix s = initial_state(m, InitialKind::singlet);
  CHECK(s.trace() == doctest::Approx(1.0));
  CHECK(s.shelf_singlet() == 0.0);
  CHECK(s.min_eigenvalue() > -1e-15);
  const DensityMatrix d = initial_state(m, InitialKind::dephased);
  CHECK(d.trace() == doctest::Approx(1.0));
  CHECK((d.matrix() * d.matrix()).trace().real() < (s.matrix() * s.matrix()).trace().real());
  CHECK_THROWS_AS(parse_initial_kind("mixed"), ValidationError);
}

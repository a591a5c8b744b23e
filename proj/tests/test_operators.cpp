#include <doctest.h>

#include <array>
#include <random>

#include "radpair/errors.hpp"
#include "radpair/operators.hpp"
#include "support.hpp"

using namespace radpair;
using radpair::test::max_abs;

TEST_CASE("pauli matrices square to identity and anticommute") {
  const Complex i(0.0, 1.0);
  const Matrix x = pauli(Axis::x), y = pauli(Axis::y), z = pauli(Axis::z);
  for (const Matrix* p : {&x, &y, &z}) {
    CHECK(max_abs(*p * *p - identity(2)) == 0.0);
    CHECK(hermiticity_error(*p) == 0.0);
  }
  CHECK(max_abs(x * y - i * z) < 1e-15);
  CHECK(max_abs(y * z - i * x) < 1e-15);
  CHECK(max_abs(z * x - i * y) < 1e-15);
  CHECK(max_abs(x * y + y * x) < 1e-15);
}

TEST_CASE("embed agrees with an explicit Kronecker product") {
  const std::array<int, 4> dims{2, 2, 2, 2};
  std::mt19937 rng(7);
  const Matrix a = radpair::test::random_matrix(2, rng);
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    Matrix expected = Matrix::Identity(1, 1);
    for (std::size_t s = 0; s < dims.size(); ++s) expected = kron(expected, s == slot ? a : identity(2));
    CHECK(max_abs(embed(a, slot, dims) - expected) < 1e-15);
  }
}

TEST_CASE("embedded operators on different slots commute and compose") {
  const std::array<int, 3> dims{2, 2, 2};
  const Matrix a = embed(pauli(Axis::x), 0, dims);
  const Matrix b = embed(pauli(Axis::y), 2, dims);
  CHECK(max_abs(a * b - b * a) < 1e-15);
  CHECK(max_abs(a * b - kron(kron(pauli(Axis::x), identity(2)), pauli(Axis::y))) < 1e-15);
  const Matrix zz = embed(pauli(Axis::z) * pauli(Axis::x), 1, dims);
  CHECK(max_abs(zz - embed(pauli(Axis::z), 1, dims) * embed(pauli(Axis::x), 1, dims)) < 1e-15);
}

TEST_CASE("embed rejects mismatched dimensions") {
  const std::array<int, 2> dims{2, 2};
  CHECK_THROWS_AS(embed(identity(3), 0, dims), DimensionError);
  CHECK_THROWS_AS(embed(identity(2), 2, dims), DimensionError);
}

TEST_CASE("singlet and triplets form an orthonormal basis with the right symmetry") {
  const auto st = singlet_triplet_states();
  Matrix basis(4, 4);
  basis << st.singlet, st.t0, st.t_plus, st.t_minus;
  CHECK(max_abs(basis.adjoint() * basis - identity(4)) < 1e-15);
  // Total spin: sum_a (s1_a + s2_a)^2 with s = sigma/2 gives S(S+1).
  Matrix s2 = Matrix::Zero(4, 4);
  for (Axis a : kAxes) {
    const Matrix total = 0.5 * (kron(pauli(a), identity(2)) + kron(identity(2), pauli(a)));
    s2 += total * total;
  }
  CHECK((st.singlet.adjoint() * s2 * st.singlet)(0, 0).real() == doctest::Approx(0.0).epsilon(1e-15));
  for (const Vector* t : {&st.t0, &st.t_plus, &st.t_minus}) {
    CHECK((t->adjoint() * s2 * *t)(0, 0).real() == doctest::Approx(2.0));
  }
}

TEST_CASE("kron of identities is the identity") {
  CHECK(max_abs(kron(identity(2), identity(3)) - identity(6)) == 0.0);
}

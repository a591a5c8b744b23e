#include "radpair/hamiltonian.hpp"

#include <cmath>

#include "radpair/constants.hpp"
#include "radpair/errors.hpp"
#include "radpair/operators.hpp"

namespace radpair {

namespace {

Matrix pauli_component(const Vec3& v) {
  return v.x() * pauli(Axis::x) + v.y() * pauli(Axis::y) + v.z() * pauli(Axis::z);
}

// I . A . S on a (nucleus, electron) pair of slots.
Matrix tensor_coupling(const Mat3& a, std::size_t nucleus_slot, std::size_t electron_slot,
                       std::span<const int> dims) {
  Eigen::Index dim = 1;
  for (int d : dims) dim *= d;
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < 3; ++i) {
    const Matrix in = embed(pauli(kAxes[i]), nucleus_slot, dims);
    for (int j = 0; j < 3; ++j) {
      if (a(i, j) == 0.0) continue;
      h += a(i, j) * (in * embed(pauli(kAxes[j]), electron_slot, dims));
    }
  }
  return h;
}

Matrix single_electron_zeeman(const GTensor& g, const Vec3& b) {
  const Vec3 gb(g.gx * b.x(), g.gy * b.y(), g.gz * b.z());
  return 0.5 * PhysicalConstants::bohr_magneton * pauli_component(gb);
}

void check_nuclei(const ModelSpec& m) {
  if (m.nuclei.size() > 2) {
    throw ValidationError("model.nuclei", "at most two nuclei are supported");
  }
}

}  // namespace

Matrix hyperfine_hamiltonian(const ModelSpec& m) {
  check_nuclei(m);
  const auto dims = m.slot_dims();
  Matrix h = Matrix::Zero(m.spin_dim(), m.spin_dim());
  for (std::size_t n = 0; n < m.nuclei.size(); ++n) {
    h += tensor_coupling(m.nuclei[n].lab_frame(), n, m.electron1_slot(), dims);
  }
  return h / PhysicalConstants::hbar;
}

Matrix zeeman_hamiltonian(const ModelSpec& m, const Vec3& b) {
  check_nuclei(m);
  const auto dims = m.slot_dims();
  const Matrix h = embed(single_electron_zeeman(m.g1, b), m.electron1_slot(), dims) +
                   embed(single_electron_zeeman(m.g2, b), m.electron2_slot(), dims);
  return h / PhysicalConstants::hbar;
}

Matrix hamiltonian(const ModelSpec& m, const Vec3& b) {
  if (!b.allFinite()) throw ValidationError("field", "magnetic field must be finite");
  return hyperfine_hamiltonian(m) + zeeman_hamiltonian(m, b);
}

SubsystemHamiltonians subsystem_hamiltonians(const ModelSpec& m, const Vec3& b) {
  check_nuclei(m);
  // Coupled block: slots (nuclei..., electron 1).
  std::vector<int> dims(static_cast<std::size_t>(m.nucleus_count()) + 1, 2);
  const auto e1 = static_cast<std::size_t>(m.nucleus_count());
  Matrix coupled = embed(single_electron_zeeman(m.g1, b), e1, dims);
  for (std::size_t n = 0; n < m.nuclei.size(); ++n) {
    coupled += tensor_coupling(m.nuclei[n].lab_frame(), n, e1, dims);
  }
  SubsystemHamiltonians out;
  out.coupled = coupled / PhysicalConstants::hbar;
  out.remote = single_electron_zeeman(m.g2, b) / PhysicalConstants::hbar;
  return out;
}

InitialKind parse_initial_kind(const std::string& name) {
  if (name == "singlet") return InitialKind::singlet;
  if (name == "dephased") return InitialKind::dephased;
  throw ValidationError("sweep.initial", "unknown initial state '" + name +
                                             "' (expected singlet, dephased)");
}

std::string to_string(InitialKind kind) {
  return kind == InitialKind::singlet ? "singlet" : "dephased";
}

DensityMatrix initial_state(const ModelSpec& m, InitialKind kind) {
  const auto st = singlet_triplet_states();
  Matrix electrons = st.singlet * st.singlet.adjoint();
  if (kind == InitialKind::dephased) {
    electrons = 0.5 * (electrons + st.t0 * st.t0.adjoint());
  }
  const Eigen::Index nuc = Eigen::Index{1} << m.nucleus_count();
  const Matrix spin = kron(identity(nuc) / static_cast<double>(nuc), electrons);
  return DensityMatrix(extend_to_shelves(spin), m.spin_dim());
}

Matrix extend_to_shelves(const Matrix& spin_op) {
  Matrix out = Matrix::Zero(spin_op.rows() + 2, spin_op.cols() + 2);
  out.topLeftCorner(spin_op.rows(), spin_op.cols()) = spin_op;
  return out;
}

}  // namespace radpair

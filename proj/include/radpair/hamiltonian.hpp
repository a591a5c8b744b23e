#pragma once

#include <string>

#include "radpair/density_matrix.hpp"
#include "radpair/model.hpp"

namespace radpair {

// Sum over nuclei of I_i . A_i . S_1 (Pauli operators), in rad/s on the spin space.
Matrix hyperfine_hamiltonian(const ModelSpec& m);

// 0.5 mu_B sum_a (g1_a b_a sigma_a^(e1) + g2_a b_a sigma_a^(e2)), in rad/s.
Matrix zeeman_hamiltonian(const ModelSpec& m, const Vec3& b);

// Full spin Hamiltonian (dimension spin_dim) in rad/s for field b in tesla.
Matrix hamiltonian(const ModelSpec& m, const Vec3& b);

// Commuting pieces of the static Hamiltonian: nuclei x electron 1 (hyperfine plus
// electron-1 Zeeman) and the free electron 2 (its Zeeman term), each on its own
// factor space. hamiltonian(m, b) == coupled x I_2 + I x remote.
struct SubsystemHamiltonians {
  Matrix coupled;
  Matrix remote;
};

SubsystemHamiltonians subsystem_hamiltonians(const ModelSpec& m, const Vec3& b);

enum class InitialKind { singlet, dephased };

InitialKind parse_initial_kind(const std::string& name);
std::string to_string(InitialKind kind);

// Electron-pair state on a maximally mixed nuclear background, trace 1, empty shelves.
DensityMatrix initial_state(const ModelSpec& m, InitialKind kind);

// Zero-pads a spin-space operator with the two shelf rows and columns.
Matrix extend_to_shelves(const Matrix& spin_op);

}  // namespace radpair

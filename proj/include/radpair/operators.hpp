#pragma once

#include <span>

#include "radpair/types.hpp"

namespace radpair {

enum class Axis { x, y, z };

inline constexpr Axis kAxes[] = {Axis::x, Axis::y, Axis::z};

// Pauli matrix with sigma_z = diag(1, -1); basis order is (up, down).
Matrix pauli(Axis axis);

Matrix identity(Eigen::Index dim);

Matrix kron(const Matrix& a, const Matrix& b);

// Places `op` on tensor slot `slot` of a product space with factor dimensions
// `dims`, identity elsewhere. Slot 0 is the most significant index.
Matrix embed(const Matrix& op, std::size_t slot, std::span<const int> dims);

struct SingletTriplet {
  Vector singlet;
  Vector t0;
  Vector t_plus;
  Vector t_minus;
};

// Two-electron states in the (electron 1) x (electron 2) product basis.
SingletTriplet singlet_triplet_states();

// max |H - H^dagger| / max |H|; zero for the zero matrix.
double hermiticity_error(const Matrix& h);

}  // namespace radpair

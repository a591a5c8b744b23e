#pragma once

namespace radpair {

// CODATA values in the meV / tesla / second system used throughout.
struct PhysicalConstants {
  static constexpr double hbar = 6.58211957e-13;        // meV s
  static constexpr double bohr_magneton = 5.7883818e-2;  // meV / T
  static constexpr double g_free = 2.0;
  // Gyromagnetic ratio for Pauli-matrix spin operators: 0.5 * mu_B * g.
  static constexpr double gamma = 0.5 * bohr_magneton * g_free;

  static constexpr double to_angular(double mev) { return mev / hbar; }
  static constexpr double to_mev(double rad_per_s) { return rad_per_s * hbar; }
};

}  // namespace radpair

#pragma once

#include <string>
#include <vector>

#include "radpair/types.hpp"

namespace radpair {

/// Anisotropic hyperfine coupling between one nucleus and electron 1.
///
/// Principal values are energies in meV. `orientation` rotates the principal
/// frame into the lab frame (A_lab = R diag(ax, ay, az) R^T); the lab z axis is
/// the axis the static-field angle theta is measured from.
struct HyperfineTensor {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;
  Mat3 orientation = Mat3::Identity();

  Mat3 lab_frame() const;
  HyperfineTensor scaled(double factor) const;
  double max_abs() const;

  // Axially symmetric: az = 1e-5 meV, ax = ay = az / 2.
  static HyperfineTensor cigar();
  // ax = az = 0.5e-5 meV, ay = ax / 6, with the unique y axis rotated onto lab z.
  static HyperfineTensor disc();
};

struct GTensor {
  double gx = 2.0;
  double gy = 2.0;
  double gz = 2.0;

  static GTensor isotropic() { return {}; }
  // gz = 0.8 * 2, gx = gy = 0.3 * 2.
  static GTensor anisotropic() { return {0.6, 0.6, 1.6}; }
  double max_abs() const;
};

/// Two electrons plus up to two nuclear spins, all nuclei coupled to electron 1.
///
/// Tensor slot order is fixed: nucleus 1, nucleus 2, electron 1, electron 2.
/// Rates are in 1/s.
struct ModelSpec {
  std::vector<HyperfineTensor> nuclei;
  GTensor g1;
  GTensor g2;
  double k = 1.0e4;
  double gamma_noise = 0.0;
  double gamma_z = 0.0;

  int nucleus_count() const { return static_cast<int>(nuclei.size()); }
  int spin_dim() const { return 4 << nucleus_count(); }
  int total_dim() const { return spin_dim() + 2; }
  std::vector<int> slot_dims() const;
  int electron1_slot() const { return nucleus_count(); }
  int electron2_slot() const { return nucleus_count() + 1; }

  // Throws ValidationError naming the offending field.
  void validate() const;
};

enum class ModelPreset { cigar, disc, anisotropic_g, two_nuclei, none };

ModelSpec make_model(ModelPreset preset, double k);
ModelPreset parse_model_preset(const std::string& name);
std::string to_string(ModelPreset preset);

}  // namespace radpair

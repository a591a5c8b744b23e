#include "radpair/model.hpp"

#include <algorithm>
#include <cmath>

#include "radpair/errors.hpp"

namespace radpair {

Mat3 HyperfineTensor::lab_frame() const {
  return orientation * Vec3(ax, ay, az).asDiagonal() * orientation.transpose();
}

HyperfineTensor HyperfineTensor::scaled(double factor) const {
  HyperfineTensor out = *this;
  out.ax *= factor;
  out.ay *= factor;
  out.az *= factor;
  return out;
}

double HyperfineTensor::max_abs() const {
  return std::max({std::abs(ax), std::abs(ay), std::abs(az)});
}

HyperfineTensor HyperfineTensor::cigar() {
  HyperfineTensor a;
  a.az = 1.0e-5;
  a.ax = a.az / 2.0;
  a.ay = a.az / 2.0;
  return a;
}

HyperfineTensor HyperfineTensor::disc() {
  HyperfineTensor a;
  a.ax = 0.5e-5;
  a.ay = a.ax / 6.0;
  a.az = a.ax;
  // +90 degrees about x: molecular y -> lab z, molecular z -> lab -y.
  a.orientation << 1.0, 0.0, 0.0,
                   0.0, 0.0, -1.0,
                   0.0, 1.0, 0.0;
  return a;
}

double GTensor::max_abs() const {
  return std::max({std::abs(gx), std::abs(gy), std::abs(gz)});
}

std::vector<int> ModelSpec::slot_dims() const {
  return std::vector<int>(static_cast<std::size_t>(nucleus_count()) + 2, 2);
}

void ModelSpec::validate() const {
  if (nuclei.size() > 2) {
    throw ValidationError("model.nuclei", "at most two nuclei are supported, got " +
                                              std::to_string(nuclei.size()));
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("model.k_per_second", "decay rate must be positive and finite");
  }
  if (!(gamma_noise >= 0.0) || !std::isfinite(gamma_noise)) {
    throw ValidationError("model.gamma_noise_per_second", "noise rate must be >= 0");
  }
  if (!(gamma_z >= 0.0) || !std::isfinite(gamma_z)) {
    throw ValidationError("model.gamma_z_per_second", "dephasing rate must be >= 0");
  }
  for (const auto& a : nuclei) {
    if (!std::isfinite(a.ax) || !std::isfinite(a.ay) || !std::isfinite(a.az)) {
      throw ValidationError("model.nuclei", "hyperfine couplings must be finite");
    }
    const Mat3 rtr = a.orientation.transpose() * a.orientation;
    if ((rtr - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
      throw ValidationError("model.nuclei.orientation", "orientation must be a rotation");
    }
  }
}

ModelSpec make_model(ModelPreset preset, double k) {
  ModelSpec m;
  m.k = k;
  switch (preset) {
    case ModelPreset::cigar:
      m.nuclei = {HyperfineTensor::cigar()};
      break;
    case ModelPreset::disc:
      m.nuclei = {HyperfineTensor::disc()};
      break;
    case ModelPreset::anisotropic_g:
      m.g1 = GTensor::anisotropic();
      break;
    case ModelPreset::two_nuclei:
      // Second tensor parallel to the first at 2/3 strength.
      m.nuclei = {HyperfineTensor::cigar(), HyperfineTensor::cigar().scaled(2.0 / 3.0)};
      break;
    case ModelPreset::none:
      break;
  }
  return m;
}

ModelPreset parse_model_preset(const std::string& name) {
  if (name == "cigar") return ModelPreset::cigar;
  if (name == "disc") return ModelPreset::disc;
  if (name == "anisotropic-g") return ModelPreset::anisotropic_g;
  if (name == "two-nuclei") return ModelPreset::two_nuclei;
  if (name == "none") return ModelPreset::none;
  throw ValidationError("model.preset", "unknown preset '" + name +
                                            "' (expected cigar, disc, anisotropic-g, "
                                            "two-nuclei, none)");
}

std::string to_string(ModelPreset preset) {
  switch (preset) {
    case ModelPreset::cigar: return "cigar";
    case ModelPreset::disc: return "disc";
    case ModelPreset::anisotropic_g: return "anisotropic-g";
    case ModelPreset::two_nuclei: return "two-nuclei";
    case ModelPreset::none: return "none";
  }
  return "none";
}

}  // namespace radpair

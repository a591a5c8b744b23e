#include "radpair/field.hpp"

#include <cmath>

#include "radpair/constants.hpp"
#include "radpair/errors.hpp"

namespace radpair {

Vec3 direction(double theta, double phi) {
  return {std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta), std::cos(theta)};
}

Vec3 FieldSpec::static_field() const { return b0 * direction(theta_static, phi_static); }

Vec3 FieldSpec::rf_amplitude() const { return b_rf * direction(theta_rf, phi_rf); }

FieldSpec FieldSpec::at_angle(double theta) const {
  FieldSpec out = *this;
  out.theta_static = theta;
  switch (rf_orientation) {
    case RfOrientation::perpendicular:
      out.theta_rf = theta + kPi / 2.0;
      out.phi_rf = phi_static;
      break;
    case RfOrientation::parallel:
      out.theta_rf = theta;
      out.phi_rf = phi_static;
      break;
    case RfOrientation::fixed:
      break;
  }
  return out;
}

FieldSpec FieldSpec::without_rf() const {
  FieldSpec out = *this;
  out.b_rf = 0.0;
  return out;
}

double FieldSpec::resonant_omega(double b0) {
  return 2.0 * PhysicalConstants::gamma * b0 / PhysicalConstants::hbar;
}

FieldSpec FieldSpec::resonant_perpendicular(double theta, double b_rf) {
  FieldSpec f;
  f.b_rf = b_rf;
  f.omega = resonant_omega(f.b0);
  f.rf_orientation = RfOrientation::perpendicular;
  return f.at_angle(theta);
}

Vec3 field_at(const FieldSpec& f, double t) {
  Vec3 b = f.static_field();
  if (f.b_rf != 0.0) b += std::cos(f.omega * t + f.rf_phase) * f.rf_amplitude();
  return b;
}

RfOrientation parse_rf_orientation(const std::string& name) {
  if (name == "perpendicular") return RfOrientation::perpendicular;
  if (name == "parallel") return RfOrientation::parallel;
  if (name == "fixed") return RfOrientation::fixed;
  throw ValidationError("field.rf_orientation",
                        "unknown orientation '" + name + "' (expected perpendicular, parallel, fixed)");
}

std::string to_string(RfOrientation o) {
  switch (o) {
    case RfOrientation::perpendicular: return "perpendicular";
    case RfOrientation::parallel: return "parallel";
    case RfOrientation::fixed: return "fixed";
  }
  return "fixed";
}

}  // namespace radpair

#pragma once

#include <string>

#include "radpair/types.hpp"

namespace radpair {

// How the oscillatory field direction follows the static field in a sweep.
enum class RfOrientation {
  perpendicular,  // same azimuth, theta_rf = theta_static + pi/2
  parallel,       // theta_rf = theta_static, phi_rf = phi_static
  fixed,          // theta_rf / phi_rf used as given
};

/// Static plus oscillatory magnetic field:
///   B(t) = b0 * n(theta_static, phi_static) + b_rf * cos(omega t + rf_phase) * n(theta_rf, phi_rf)
/// with n(theta, phi) = (cos phi sin theta, sin phi sin theta, cos theta). Tesla, radians, rad/s.
struct FieldSpec {
  double b0 = 47.0e-6;
  double theta_static = 0.0;
  double phi_static = 0.0;
  double b_rf = 0.0;
  double theta_rf = kPi / 2.0;
  double phi_rf = 0.0;
  double omega = 0.0;
  double rf_phase = 0.0;
  RfOrientation rf_orientation = RfOrientation::perpendicular;

  bool has_rf() const { return b_rf != 0.0 && omega > 0.0; }
  double period() const { return 2.0 * kPi / omega; }

  Vec3 static_field() const;
  Vec3 rf_amplitude() const;

  // Copy with the static field at polar angle theta; the rf direction is
  // re-derived from rf_orientation.
  FieldSpec at_angle(double theta) const;
  FieldSpec without_rf() const;

  // omega = 2 gamma b0 / hbar, resonant with the free electron's Zeeman splitting.
  static double resonant_omega(double b0);
  // Earth field with a 150 nT resonant rf field perpendicular to it.
  static FieldSpec resonant_perpendicular(double theta, double b_rf = 150.0e-9);
};

Vec3 direction(double theta, double phi);

Vec3 field_at(const FieldSpec& f, double t);

RfOrientation parse_rf_orientation(const std::string& name);
std::string to_string(RfOrientation o);

}  // namespace radpair

#pragma once

#include <filesystem>
#include <string>

#include "radpair/experiments.hpp"

namespace radpair {

/// Reads a YAML scenario. Every key is optional; missing keys take the
/// defaults of ScenarioConfig, so an empty document yields the cigar model at
/// k = 1e4 in a 47 uT field with a 150 nT resonant perpendicular rf field.
///
///   name: <string>
///   model:  preset, k_per_second, gamma_noise_per_second, gamma_z_per_second,
///           nuclei: [{ax_mev, ay_mev, az_mev, orientation: [[3], [3], [3]]}],
///           g1: [gx, gy, gz], g2: [gx, gy, gz]
///   field:  b0_tesla, phi_static_rad, b_rf_tesla, omega_rad_per_second,
///           rf_orientation, theta_rf_rad, phi_rf_rad, rf_phase_rad, rf_phase_samples
///   sweep:  angles | theta_rad: [..], channels, initial
///   solver: method, path, dt_seconds, t_max_seconds, residual_eps,
///           trajectory_stride, step_halving_check
///   outputs: plot
///   negativity: theta_rad, convention, renormalize, t_end_seconds
///
/// omega defaults to the free-electron resonance of b0. Malformed YAML and
/// values of the wrong type raise ParseError with the line; unknown keys and
/// out-of-range values raise ValidationError naming the key.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);

// Canonical YAML; parse_config(to_yaml(c)) reproduces c.
std::string to_yaml(const ScenarioConfig& cfg);

// 64-bit FNV-1a of to_yaml, as 16 hex digits.
std::string config_hash(const ScenarioConfig& cfg);
std::string solver_description(const ScenarioConfig& cfg);

}  // namespace radpair

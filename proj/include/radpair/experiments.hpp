#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radpair/observables.hpp"

namespace radpair {

enum class ChannelSelection { decay_only, generic_noise, dephasing, noise_and_rf };

ChannelSelection parse_channel_selection(const std::string& name);
std::string to_string(ChannelSelection s);

// automatic: linear solve for static fields, integration with rf.
enum class SolvePath { automatic, integrate };

SolvePath parse_solve_path(const std::string& name);
std::string to_string(SolvePath p);

struct NegativityRequest {
  double theta = kPi / 4.0;
  NegativityConvention convention = NegativityConvention::standard;
  bool renormalize = false;
  double t_end = 0.0;  // s; 0 selects 5 / k
};

struct ScenarioConfig {
  std::string name = "fig2-k1e4";
  ModelPreset preset = ModelPreset::cigar;
  ModelSpec model = make_model(ModelPreset::cigar, 1.0e4);
  FieldSpec field = FieldSpec::resonant_perpendicular(0.0);
  std::vector<double> angle_grid;
  ChannelSelection channels = ChannelSelection::decay_only;
  InitialKind initial = InitialKind::singlet;
  SolverOptions solver;
  SolvePath path = SolvePath::automatic;
  bool write_plot = true;
  NegativityRequest negativity;

  ScenarioConfig();

  ChannelFlags flags() const;
  // Throws ValidationError naming the offending key.
  void validate() const;
};

// n points spanning [0, pi/2] inclusive; a single point sits at 0.
std::vector<double> uniform_angle_grid(int n);

struct SweepResult {
  std::string scenario;
  std::vector<YieldPoint> points;
  double contrast = 0.0;
  std::optional<std::vector<YieldPoint>> reference;  // same grid without rf
  std::optional<double> disruption;
  std::string config_hash;
  std::string solver_description;

  std::size_t failures() const;
};

/// One yield per grid angle, computed in parallel with results stored by
/// index, so the output does not depend on the thread count. Failed angles are
/// recorded as gaps. With rf on, a paired no-rf sweep and the rf disruption are
/// included.
SweepResult angular_sweep(const ScenarioConfig& cfg, int threads = 1);

enum class ScanAxis { k, gamma_noise, gamma_z };

ScanAxis parse_scan_axis(const std::string& name);
std::string to_string(ScanAxis axis);

struct ScanRow {
  double value = 0.0;
  double contrast = 0.0;    // of the no-rf curve
  double disruption = 0.0;  // NaN without rf
};

struct ScanTable {
  ScanAxis axis = ScanAxis::k;
  std::vector<ScanRow> rows;
  double zero_rate_contrast = 0.0;        // rate axes: contrast at rate 0
  std::optional<double> k_threshold;      // largest grid k with D >= max(D) / 2
  std::optional<double> k_threshold_interpolated;
  std::optional<double> halving_rate;     // smallest grid rate with contrast <= half
  std::string config_hash;
};

// For the k axis the rf field is switched on (150 nT, resonant, perpendicular)
// if the scenario has none.
ScanTable threshold_scan(ScanAxis axis, const std::vector<double>& grid, const ScenarioConfig& cfg,
                         int threads = 1);

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace radpair

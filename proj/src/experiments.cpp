#include "radpair/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "radpair/config.hpp"
#include "radpair/errors.hpp"

namespace radpair {

namespace {

YieldPoint solve_point(const ScenarioConfig& cfg, const FieldSpec& field, double theta) {
  YieldPoint p;
  p.theta = theta;
  const FieldSpec f = field.at_angle(theta);
  try {
    Yields y;
    if (!f.has_rf() && cfg.path == SolvePath::automatic) {
      y = yield_direct(cfg.model, f, cfg.initial, cfg.flags());
      p.method = "linear-solve";
    } else {
      y = yield_integrated(cfg.model, f, cfg.solver, cfg.initial, cfg.flags());
      p.method = to_string(cfg.solver.method);
    }
    p.phi_s = y.singlet;
    p.phi_t = y.triplet;
  } catch (const Error& e) {
    p.ok = false;
    p.error = e.what();
    p.phi_s = std::numeric_limits<double>::quiet_NaN();
    p.phi_t = p.phi_s;
  }
  return p;
}

std::vector<YieldPoint> sweep_points(const ScenarioConfig& cfg, const FieldSpec& field, int threads) {
  std::vector<YieldPoint> out(cfg.angle_grid.size());
  parallel_for(out.size(), threads,
               [&](std::size_t i) { out[i] = solve_point(cfg, field, cfg.angle_grid[i]); });
  return out;
}

double safe_contrast(const std::vector<YieldPoint>& pts) {
  try {
    return contrast(pts);
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

ChannelSelection parse_channel_selection(const std::string& name) {
  if (name == "decay-only") return ChannelSelection::decay_only;
  if (name == "generic-noise") return ChannelSelection::generic_noise;
  if (name == "dephasing") return ChannelSelection::dephasing;
  if (name == "noise-and-rf") return ChannelSelection::noise_and_rf;
  throw ValidationError("sweep.channels", "unknown selection '" + name +
                                              "' (expected decay-only, generic-noise, dephasing, "
                                              "noise-and-rf)");
}

std::string to_string(ChannelSelection s) {
  switch (s) {
    case ChannelSelection::decay_only: return "decay-only";
    case ChannelSelection::generic_noise: return "generic-noise";
    case ChannelSelection::dephasing: return "dephasing";
    case ChannelSelection::noise_and_rf: return "noise-and-rf";
  }
  return "decay-only";
}

SolvePath parse_solve_path(const std::string& name) {
  if (name == "auto") return SolvePath::automatic;
  if (name == "integrate") return SolvePath::integrate;
  throw ValidationError("solver.path", "unknown path '" + name + "' (expected auto, integrate)");
}

std::string to_string(SolvePath p) { return p == SolvePath::automatic ? "auto" : "integrate"; }

ScanAxis parse_scan_axis(const std::string& name) {
  if (name == "k") return ScanAxis::k;
  if (name == "noise") return ScanAxis::gamma_noise;
  if (name == "dephasing") return ScanAxis::gamma_z;
  throw ValidationError("axis", "unknown scan axis '" + name + "' (expected k, noise, dephasing)");
}

std::string to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::k: return "k";
    case ScanAxis::gamma_noise: return "noise";
    case ScanAxis::gamma_z: return "dephasing";
  }
  return "k";
}

ScenarioConfig::ScenarioConfig() : angle_grid(uniform_angle_grid(91)) {}

ChannelFlags ScenarioConfig::flags() const {
  ChannelFlags f;
  f.generic_noise = channels == ChannelSelection::generic_noise ||
                    channels == ChannelSelection::noise_and_rf;
  f.dephasing = channels == ChannelSelection::dephasing;
  return f;
}

void ScenarioConfig::validate() const {
  model.validate();
  solver.validate();
  if (angle_grid.empty()) throw ValidationError("sweep.theta_rad", "angle grid is empty");
  for (std::size_t i = 0; i < angle_grid.size(); ++i) {
    const double t = angle_grid[i];
    if (!(t >= 0.0) || t > kPi / 2.0 + 1e-12) {
      throw ValidationError("sweep.theta_rad", "angles must lie in [0, pi/2]");
    }
    if (i > 0 && !(t > angle_grid[i - 1])) {
      throw ValidationError("sweep.theta_rad", "angles must be strictly increasing");
    }
  }
  if (!(field.b0 >= 0.0) || !std::isfinite(field.b0)) {
    throw ValidationError("field.b0_tesla", "static amplitude must be >= 0");
  }
  if (!std::isfinite(field.b_rf)) throw ValidationError("field.b_rf_tesla", "must be finite");
  if (field.b_rf != 0.0 && !(field.omega > 0.0)) {
    throw ValidationError("field.omega_rad_per_second", "rf frequency must be positive");
  }
  if (channels == ChannelSelection::noise_and_rf && !field.has_rf()) {
    throw ValidationError("sweep.channels", "noise-and-rf needs a non-zero field.b_rf_tesla");
  }
}

std::vector<double> uniform_angle_grid(int n) {
  if (n < 1) throw ValidationError("sweep.angles", "need at least one angle");
  if (n == 1) return {0.0};
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (kPi / 2.0) * i / (n - 1);
  return g;
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(),
                                                [](const YieldPoint& p) { return !p.ok; }));
}

SweepResult angular_sweep(const ScenarioConfig& cfg, int threads) {
  cfg.validate();
  SweepResult r;
  r.scenario = cfg.name;
  r.config_hash = config_hash(cfg);
  r.solver_description = solver_description(cfg);
  r.points = sweep_points(cfg, cfg.field, threads);
  r.contrast = safe_contrast(r.points);
  if (cfg.field.has_rf()) {
    r.reference = sweep_points(cfg, cfg.field.without_rf(), threads);
    r.disruption = rf_disruption(*r.reference, r.points);
  }
  return r;
}

ScanTable threshold_scan(ScanAxis axis, const std::vector<double>& grid, const ScenarioConfig& base,
                         int threads) {
  if (grid.empty()) throw ValidationError("grid", "scan grid is empty");
  for (double v : grid) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("grid", "grid values must be positive");
  }
  ScanTable table;
  table.axis = axis;
  table.config_hash = config_hash(base);

  ScenarioConfig cfg = base;
  if (axis == ScanAxis::k && !cfg.field.has_rf()) {
    FieldSpec f = FieldSpec::resonant_perpendicular(0.0);
    f.b0 = cfg.field.b0;
    f.omega = FieldSpec::resonant_omega(f.b0);
    f.phi_static = cfg.field.phi_static;
    cfg.field = f;
  }
  if (axis == ScanAxis::gamma_noise && cfg.channels != ChannelSelection::noise_and_rf) {
    cfg.channels = ChannelSelection::generic_noise;
  }
  if (axis == ScanAxis::gamma_z) cfg.channels = ChannelSelection::dephasing;

  auto configured = [&](double v) {
    ScenarioConfig c = cfg;
    switch (axis) {
      case ScanAxis::k: c.model.k = v; break;
      case ScanAxis::gamma_noise: c.model.gamma_noise = v; break;
      case ScanAxis::gamma_z: c.model.gamma_z = v; break;
    }
    return c;
  };
  auto no_rf_contrast = [](const SweepResult& s) {
    return s.reference ? safe_contrast(*s.reference) : s.contrast;
  };

  for (double v : grid) {
    const SweepResult s = angular_sweep(configured(v), threads);
    ScanRow row;
    row.value = v;
    row.contrast = no_rf_contrast(s);
    row.disruption = s.disruption.value_or(std::numeric_limits<double>::quiet_NaN());
    table.rows.push_back(row);
  }

  if (axis == ScanAxis::k) {
    double d_max = 0.0;
    for (const auto& row : table.rows) d_max = std::max(d_max, row.disruption);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (table.rows[i].disruption >= 0.5 * d_max) {
        table.k_threshold = std::max(table.k_threshold.value_or(0.0), table.rows[i].value);
      }
    }
    // Log-linear crossing of D = max/2 after the last grid point at or above it.
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
      const auto& a = table.rows[i];
      const auto& b = table.rows[i + 1];
      if (a.value == *table.k_threshold && b.disruption < 0.5 * d_max) {
        const double frac = (a.disruption - 0.5 * d_max) / (a.disruption - b.disruption);
        table.k_threshold_interpolated =
            std::exp(std::log(a.value) + frac * (std::log(b.value) - std::log(a.value)));
      }
    }
  } else {
    table.zero_rate_contrast = no_rf_contrast(angular_sweep(configured(0.0), threads));
    for (const auto& row : table.rows) {
      if (row.contrast <= 0.5 * table.zero_rate_contrast) {
        table.halving_rate = std::min(table.halving_rate.value_or(row.value), row.value);
      }
    }
  }
  return table;
}

}  // namespace radpair

#include "radpair/config.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "radpair/csv.hpp"
#include "radpair/errors.hpp"

namespace radpair {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line + 1; }

template <typename T>
T convert(const YAML::Node& n, const std::string& key) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw ParseError(line_of(n), "bad value for '" + key + "'");
  }
}

// A mapping whose keys are checked against the ones actually read.
class Section {
 public:
  Section(const YAML::Node& node, std::string prefix) : node_(node), prefix_(std::move(prefix)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ParseError(line_of(node_), "'" + prefix_ + "' must be a mapping");
    }
  }

  YAML::Node child(const std::string& key) {
    known_.insert(key);
    if (!node_ || node_.IsNull()) return YAML::Node();
    return node_[key];
  }

  template <typename T>
  bool read(const std::string& key, T& out) {
    const YAML::Node n = child(key);
    if (!n || n.IsNull()) return false;
    out = convert<T>(n, path(key));
    return true;
  }

  std::string path(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

  void reject_unknown() const {
    if (!node_ || node_.IsNull()) return;
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      const auto key = it->first.as<std::string>();
      if (!known_.contains(key)) {
        throw ValidationError(path(key), "unknown key '" + key + "' at line " +
                                             std::to_string(line_of(it->first)));
      }
    }
  }

 private:
  YAML::Node node_;
  std::string prefix_;
  std::set<std::string> known_;
};

std::array<double, 3> triple(const YAML::Node& n, const std::string& key) {
  if (!n.IsSequence() || n.size() != 3) throw ParseError(line_of(n), "'" + key + "' needs 3 numbers");
  return {convert<double>(n[0], key), convert<double>(n[1], key), convert<double>(n[2], key)};
}

GTensor read_g(const YAML::Node& n, const std::string& key) {
  const auto v = triple(n, key);
  return {v[0], v[1], v[2]};
}

HyperfineTensor read_tensor(const YAML::Node& n, const std::string& prefix) {
  Section s(n, prefix);
  HyperfineTensor t;
  s.read("ax_mev", t.ax);
  s.read("ay_mev", t.ay);
  s.read("az_mev", t.az);
  const YAML::Node o = s.child("orientation");
  if (o && !o.IsNull()) {
    if (!o.IsSequence() || o.size() != 3) throw ParseError(line_of(o), "orientation needs 3 rows");
    for (int r = 0; r < 3; ++r) {
      const auto row = triple(o[r], prefix + ".orientation");
      for (int c = 0; c < 3; ++c) t.orientation(r, c) = row[static_cast<std::size_t>(c)];
    }
    if (!(t.orientation * t.orientation.transpose()).isIdentity(1e-9)) {
      throw ValidationError(prefix + ".orientation", "must be an orthogonal matrix");
    }
  }
  s.reject_unknown();
  return t;
}

void read_model(const YAML::Node& node, ScenarioConfig& cfg) {
  Section s(node, "model");
  std::string preset;
  if (s.read("preset", preset)) cfg.preset = parse_model_preset(preset);
  double k = cfg.model.k;
  s.read("k_per_second", k);
  cfg.model = make_model(cfg.preset, k);
  s.read("gamma_noise_per_second", cfg.model.gamma_noise);
  s.read("gamma_z_per_second", cfg.model.gamma_z);
  const YAML::Node nuclei = s.child("nuclei");
  if (nuclei && !nuclei.IsNull()) {
    if (!nuclei.IsSequence()) throw ParseError(line_of(nuclei), "'model.nuclei' must be a list");
    cfg.model.nuclei.clear();
    for (std::size_t i = 0; i < nuclei.size(); ++i) {
      cfg.model.nuclei.push_back(read_tensor(nuclei[i], "model.nuclei[" + std::to_string(i) + "]"));
    }
  }
  if (const YAML::Node g = s.child("g1"); g && !g.IsNull()) cfg.model.g1 = read_g(g, "model.g1");
  if (const YAML::Node g = s.child("g2"); g && !g.IsNull()) cfg.model.g2 = read_g(g, "model.g2");
  s.reject_unknown();
}

void read_field(const YAML::Node& node, ScenarioConfig& cfg) {
  Section s(node, "field");
  FieldSpec& f = cfg.field;
  s.read("b0_tesla", f.b0);
  s.read("phi_static_rad", f.phi_static);
  s.read("b_rf_tesla", f.b_rf);
  if (!s.read("omega_rad_per_second", f.omega)) f.omega = FieldSpec::resonant_omega(f.b0);
  std::string orientation;
  if (s.read("rf_orientation", orientation)) f.rf_orientation = parse_rf_orientation(orientation);
  const bool has_theta = s.read("theta_rf_rad", f.theta_rf);
  const bool has_phi = s.read("phi_rf_rad", f.phi_rf);
  if ((has_theta || has_phi) && f.rf_orientation != RfOrientation::fixed) {
    throw ValidationError("field.theta_rf_rad", "rf angles apply only with rf_orientation: fixed");
  }
  s.read("rf_phase_rad", f.rf_phase);
  s.read("rf_phase_samples", cfg.solver.rf_phase_samples);
  s.reject_unknown();
}

void read_sweep(const YAML::Node& node, ScenarioConfig& cfg) {
  Section s(node, "sweep");
  int count = 0;
  const bool has_count = s.read("angles", count);
  const YAML::Node list = s.child("theta_rad");
  const bool has_list = list && !list.IsNull();
  if (has_count && has_list) throw ValidationError("sweep.angles", "give either angles or theta_rad");
  if (has_count) cfg.angle_grid = uniform_angle_grid(count);
  if (has_list) {
    if (!list.IsSequence()) throw ParseError(line_of(list), "'sweep.theta_rad' must be a list");
    cfg.angle_grid.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      cfg.angle_grid.push_back(convert<double>(list[i], "sweep.theta_rad"));
    }
  }
  std::string text;
  if (s.read("channels", text)) cfg.channels = parse_channel_selection(text);
  if (s.read("initial", text)) cfg.initial = parse_initial_kind(text);
  s.reject_unknown();
}

void read_solver(const YAML::Node& node, ScenarioConfig& cfg) {
  Section s(node, "solver");
  std::string text;
  if (s.read("method", text)) cfg.solver.method = parse_method(text);
  if (s.read("path", text)) cfg.path = parse_solve_path(text);
  s.read("dt_seconds", cfg.solver.dt);
  s.read("t_max_seconds", cfg.solver.t_max);
  s.read("residual_eps", cfg.solver.residual_eps);
  s.read("trajectory_stride", cfg.solver.trajectory_stride);
  s.read("step_halving_check", cfg.solver.step_halving_check);
  s.reject_unknown();
}

void read_negativity(const YAML::Node& node, ScenarioConfig& cfg) {
  Section s(node, "negativity");
  NegativityRequest& n = cfg.negativity;
  s.read("theta_rad", n.theta);
  std::string text;
  if (s.read("convention", text)) n.convention = parse_negativity_convention(text);
  s.read("renormalize", n.renormalize);
  s.read("t_end_seconds", n.t_end);
  s.reject_unknown();
  if (!(n.theta >= 0.0 && n.theta <= kPi)) throw ValidationError("negativity.theta_rad", "must lie in [0, pi]");
  if (!(n.t_end >= 0.0)) throw ValidationError("negativity.t_end_seconds", "must be >= 0");
}

std::string num(double v) { return format_double(v); }

std::string triple_text(double a, double b, double c) {
  return "[" + num(a) + ", " + num(b) + ", " + num(c) + "]";
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.mark.line + 1, e.msg);
  }
  ScenarioConfig cfg;
  cfg.field.omega = FieldSpec::resonant_omega(cfg.field.b0);
  Section top(root, "");
  top.read("name", cfg.name);
  read_model(top.child("model"), cfg);
  read_field(top.child("field"), cfg);
  read_sweep(top.child("sweep"), cfg);
  read_solver(top.child("solver"), cfg);
  Section outputs(top.child("outputs"), "outputs");
  outputs.read("plot", cfg.write_plot);
  outputs.reject_unknown();
  read_negativity(top.child("negativity"), cfg);
  top.reject_unknown();
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_yaml(const ScenarioConfig& cfg) {
  std::ostringstream o;
  const ModelSpec& m = cfg.model;
  o << "name: \"" << cfg.name << "\"\n";
  o << "model:\n";
  o << "  preset: " << to_string(cfg.preset) << "\n";
  o << "  k_per_second: " << num(m.k) << "\n";
  o << "  gamma_noise_per_second: " << num(m.gamma_noise) << "\n";
  o << "  gamma_z_per_second: " << num(m.gamma_z) << "\n";
  o << "  nuclei:" << (m.nuclei.empty() ? " []\n" : "\n");
  for (const auto& t : m.nuclei) {
    o << "    - ax_mev: " << num(t.ax) << "\n";
    o << "      ay_mev: " << num(t.ay) << "\n";
    o << "      az_mev: " << num(t.az) << "\n";
    o << "      orientation:\n";
    for (int r = 0; r < 3; ++r) {
      o << "        - " << triple_text(t.orientation(r, 0), t.orientation(r, 1), t.orientation(r, 2)) << "\n";
    }
  }
  o << "  g1: " << triple_text(m.g1.gx, m.g1.gy, m.g1.gz) << "\n";
  o << "  g2: " << triple_text(m.g2.gx, m.g2.gy, m.g2.gz) << "\n";
  const FieldSpec& f = cfg.field;
  o << "field:\n";
  o << "  b0_tesla: " << num(f.b0) << "\n";
  o << "  phi_static_rad: " << num(f.phi_static) << "\n";
  o << "  b_rf_tesla: " << num(f.b_rf) << "\n";
  o << "  omega_rad_per_second: " << num(f.omega) << "\n";
  o << "  rf_orientation: " << to_string(f.rf_orientation) << "\n";
  if (f.rf_orientation == RfOrientation::fixed) {
    o << "  theta_rf_rad: " << num(f.theta_rf) << "\n";
    o << "  phi_rf_rad: " << num(f.phi_rf) << "\n";
  }
  o << "  rf_phase_rad: " << num(f.rf_phase) << "\n";
  o << "  rf_phase_samples: " << cfg.solver.rf_phase_samples << "\n";
  o << "sweep:\n";
  o << "  theta_rad: [";
  for (std::size_t i = 0; i < cfg.angle_grid.size(); ++i) o << (i ? ", " : "") << num(cfg.angle_grid[i]);
  o << "]\n";
  o << "  channels: " << to_string(cfg.channels) << "\n";
  o << "  initial: " << to_string(cfg.initial) << "\n";
  o << "solver:\n";
  o << "  method: " << to_string(cfg.solver.method) << "\n";
  o << "  path: " << to_string(cfg.path) << "\n";
  o << "  dt_seconds: " << num(cfg.solver.dt) << "\n";
  o << "  t_max_seconds: " << num(cfg.solver.t_max) << "\n";
  o << "  residual_eps: " << num(cfg.solver.residual_eps) << "\n";
  o << "  trajectory_stride: " << cfg.solver.trajectory_stride << "\n";
  o << "  step_halving_check: " << (cfg.solver.step_halving_check ? "true" : "false") << "\n";
  o << "outputs:\n";
  o << "  plot: " << (cfg.write_plot ? "true" : "false") << "\n";
  o << "negativity:\n";
  o << "  theta_rad: " << num(cfg.negativity.theta) << "\n";
  o << "  convention: " << to_string(cfg.negativity.convention) << "\n";
  o << "  renormalize: " << (cfg.negativity.renormalize ? "true" : "false") << "\n";
  o << "  t_end_seconds: " << num(cfg.negativity.t_end) << "\n";
  return o.str();
}

std::string config_hash(const ScenarioConfig& cfg) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : to_yaml(cfg)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

std::string solver_description(const ScenarioConfig& cfg) {
  const SolverOptions& s = cfg.solver;
  return "method=" + to_string(s.method) + " path=" + to_string(cfg.path) + " dt=" + num(s.dt) +
         " t_max=" + num(s.resolved_t_max(cfg.model.k)) + " residual_eps=" + num(s.residual_eps) +
         " rf_phase_samples=" + std::to_string(s.rf_phase_samples);
}

}  // namespace radpair

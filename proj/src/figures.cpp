#include "radpair/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "radpair/config.hpp"
#include "radpair/errors.hpp"

namespace radpair {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const std::vector<double> kFig2Rates = {1.0e3, 1.0e4, 1.0e5, 1.0e6};
const std::vector<double> kNoiseFractions = {0.0, 0.01, 0.1, 1.0, 10.0};

struct Case {
  std::string label;
  ScenarioConfig cfg;
};

struct Panel {
  std::string name;
  std::string title;
  std::vector<Case> cases;
  std::optional<std::size_t> reference_from;  // case whose no-rf curve is drawn
  double reference_offset = 0.0;
  bool paired_curves = false;  // draw each case's no-rf curve as well
};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

ScenarioConfig base_config(ModelPreset preset, double k, int angles) {
  ScenarioConfig c;
  c.preset = preset;
  c.model = make_model(preset, k);
  c.field = FieldSpec::resonant_perpendicular(0.0);
  c.angle_grid = uniform_angle_grid(angles);
  return c;
}

Panel k_panel(const std::string& name, ModelPreset preset, double noise_fraction, int angles) {
  Panel p;
  p.name = name;
  p.title = to_string(preset) + " model, 150 nT resonant rf" +
            (noise_fraction > 0.0 ? ", Gamma = " + short_number(noise_fraction) + " k" : "");
  for (double k : kFig2Rates) {
    Case c{"k=" + short_number(k), base_config(preset, k, angles)};
    c.cfg.name = name + "/" + c.label;
    if (noise_fraction > 0.0) {
      c.cfg.model.gamma_noise = noise_fraction * k;
      c.cfg.channels = ChannelSelection::noise_and_rf;
    }
    if (k == 1.0e4) p.reference_from = p.cases.size();
    p.cases.push_back(std::move(c));
  }
  p.reference_offset = 0.001;
  return p;
}

Panel noise_panel(const std::string& name, ModelPreset preset, int angles) {
  Panel p;
  p.name = name;
  p.title = to_string(preset) + " model, k = 1e4, generic noise";
  const double k = 1.0e4;
  for (double fraction : kNoiseFractions) {
    Case c{"Gamma=" + short_number(fraction) + "k", base_config(preset, k, angles)};
    c.cfg.name = name + "/" + c.label;
    c.cfg.field = c.cfg.field.without_rf();
    c.cfg.model.gamma_noise = fraction * k;
    c.cfg.channels = ChannelSelection::generic_noise;
    p.cases.push_back(std::move(c));
  }
  return p;
}

Panel dephasing_panel(int angles) {
  Panel p;
  p.name = "dephasing";
  p.title = "cigar model, k = 1e4, 150 nT resonant rf, pure dephasing";
  for (double gz : {0.0, 1.0e3, 1.0e4, 1.0e5}) {
    Case c{"Gamma_z=" + short_number(gz), base_config(ModelPreset::cigar, 1.0e4, angles)};
    c.cfg.name = "dephasing/" + c.label;
    c.cfg.model.gamma_z = gz;
    c.cfg.channels = ChannelSelection::dephasing;
    if (gz == 0.0) p.reference_from = p.cases.size();
    p.cases.push_back(std::move(c));
  }
  return p;
}

Panel noise_field_panel(int angles) {
  Panel p;
  p.name = "noise-k1e5";
  p.title = "cigar model, k = 1e5, with and without rf";
  p.paired_curves = true;
  const double k = 1.0e5;
  for (double fraction : {0.01, 0.1, 1.0}) {
    Case c{"Gamma=" + short_number(fraction) + "k", base_config(ModelPreset::cigar, k, angles)};
    c.cfg.name = "noise-k1e5/" + c.label;
    c.cfg.model.gamma_noise = fraction * k;
    c.cfg.channels = ChannelSelection::noise_and_rf;
    p.cases.push_back(std::move(c));
  }
  return p;
}

double max_distance(const std::vector<YieldPoint>& a, const std::vector<YieldPoint>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].ok && b[i].ok) d = std::max(d, std::abs(a[i].phi_s - b[i].phi_s));
  }
  return d;
}

CsvTable yields_header(const std::string& provenance) {
  CsvTable t;
  t.comments.push_back(provenance);
  t.columns = {"series",      "k [1/s]",    "gamma_noise [1/s]", "gamma_z [1/s]", "b_rf [T]",
               "theta [rad]", "theta/pi [1]", "phi_s [1]",       "phi_t [1]",     "status"};
  return t;
}

CsvTable summary_header(const std::string& provenance) {
  CsvTable t;
  t.comments.push_back(provenance);
  t.columns = {"series",        "k [1/s]",        "gamma_noise [1/s]",           "gamma_z [1/s]",
               "b_rf [T]",      "contrast [1]",   "contrast_no_rf [1]",          "disruption [1]",
               "distance_to_reference [1]", "failed_points"};
  return t;
}

void append_points(CsvTable& t, const std::string& label, const ScenarioConfig& cfg, double b_rf,
                   const std::vector<YieldPoint>& pts) {
  for (const auto& p : pts) {
    std::string status = p.ok ? "ok" : "failed: " + p.error;
    for (char& ch : status) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    t.rows.push_back({label, format_double(cfg.model.k), format_double(cfg.model.gamma_noise),
                      format_double(cfg.model.gamma_z), format_double(b_rf), format_double(p.theta),
                      format_double(p.theta / kPi), format_double(p.phi_s), format_double(p.phi_t),
                      status});
  }
}

void run_panel(const Panel& panel, const FigureOptions& opt, FigureResult& out) {
  const std::string provenance = "figure=" + out.name + " panel=" + panel.name + " " +
                                 solver_description(panel.cases.front().cfg);
  CsvTable yields = yields_header(provenance);
  CsvTable summary = summary_header(provenance);
  std::vector<SweepResult> results;
  for (const auto& c : panel.cases) results.push_back(angular_sweep(c.cfg, opt.threads));

  const std::vector<YieldPoint>* reference = nullptr;
  if (panel.reference_from) {
    const SweepResult& r = results[*panel.reference_from];
    reference = r.reference ? &*r.reference : &r.points;
  }

  PlotSpec plot;
  plot.title = panel.title;
  if (reference) {
    Series s = sweep_series(*reference, "reference (no rf)");
    s.y_offset = panel.reference_offset;
    if (panel.reference_offset != 0.0) s.label += ", +" + short_number(panel.reference_offset);
    plot.series.push_back(std::move(s));
    append_points(yields, "reference", panel.cases[*panel.reference_from].cfg, 0.0, *reference);
  }

  for (std::size_t i = 0; i < panel.cases.size(); ++i) {
    const Case& c = panel.cases[i];
    const SweepResult& r = results[i];
    const double b_rf = c.cfg.field.has_rf() ? c.cfg.field.b_rf : 0.0;
    append_points(yields, c.label, c.cfg, b_rf, r.points);
    if (panel.paired_curves && r.reference) {
      append_points(yields, c.label + " no rf", c.cfg, 0.0, *r.reference);
      plot.series.push_back(sweep_series(*r.reference, c.label + ", no rf"));
    }
    plot.series.push_back(sweep_series(r.points, c.label + (b_rf != 0.0 ? ", rf" : "")));

    const double no_rf_contrast = r.reference ? contrast(*r.reference) : r.contrast;
    const double distance = reference ? max_distance(r.points, *reference) : kNaN;
    const std::size_t failed =
        r.failures() + (r.reference ? static_cast<std::size_t>(std::count_if(
                                          r.reference->begin(), r.reference->end(),
                                          [](const YieldPoint& p) { return !p.ok; }))
                                    : 0);
    out.failures += failed;
    summary.rows.push_back({c.label, format_double(c.cfg.model.k), format_double(c.cfg.model.gamma_noise),
                            format_double(c.cfg.model.gamma_z), format_double(b_rf),
                            format_double(r.contrast), format_double(no_rf_contrast),
                            format_double(r.disruption.value_or(kNaN)), format_double(distance),
                            std::to_string(failed)});
    std::string line = panel.name + " " + c.label + ": contrast " + short_number(r.contrast);
    if (r.disruption) line += ", disruption " + short_number(*r.disruption);
    if (reference) line += ", distance to reference " + short_number(distance);
    if (failed) line += ", " + std::to_string(failed) + " failed points";
    out.summary.push_back(line);
  }
  out.tables.emplace_back(panel.name + "-yields.csv", std::move(yields));
  out.tables.emplace_back(panel.name + "-summary.csv", std::move(summary));
  out.plots.emplace_back(panel.name + ".svg", std::move(plot));
}

void run_negativity(const FigureOptions&, FigureResult& out) {
  const double k = 1.0e4;
  const std::vector<double> fractions = {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 10.0};
  ScenarioConfig cfg = base_config(ModelPreset::cigar, k, 1);
  cfg.name = "negativity";
  cfg.field = cfg.field.without_rf();
  cfg.channels = ChannelSelection::generic_noise;
  const std::string provenance = "figure=fig4 theta=pi/4 " + solver_description(cfg);

  CsvTable curves;
  curves.comments.push_back(provenance);
  curves.columns = {"gamma_noise [1/s]", "time [s]", "negativity_standard [1]", "negativity_paper [1]",
                    "negativity_renormalized [1]", "spin_population [1]"};
  CsvTable summary;
  summary.comments.push_back(provenance);
  summary.columns = {"gamma_noise [1/s]", "death_time [s]", "final_time [s]", "final_negativity [1]"};
  PlotSpec plot;
  plot.title = "negativity at theta = pi/4, k = 1e4";
  plot.x_label = "t [μs]";
  plot.y_label = "negativity";

  for (double fraction : fractions) {
    ScenarioConfig c = cfg;
    c.model.gamma_noise = fraction * k;
    const NegativityCurve n = negativity_curve(c);
    Series s;
    s.label = "Gamma=" + short_number(fraction) + "k";
    for (std::size_t i = 0; i < n.times.size(); ++i) {
      curves.rows.push_back({format_double(c.model.gamma_noise), format_double(n.times[i]),
                             format_double(n.standard[i]), format_double(n.paper[i]),
                             format_double(n.renormalized[i]), format_double(n.spin_population[i])});
      s.x.push_back(n.times[i] * 1.0e6);
      s.y.push_back(n.standard[i]);
    }
    plot.series.push_back(std::move(s));
    summary.rows.push_back({format_double(c.model.gamma_noise), format_double(n.death_time.value_or(kNaN)),
                            format_double(n.times.back()), format_double(n.standard.back())});
    out.summary.push_back("Gamma=" + short_number(fraction) + "k: " +
                          (n.death_time ? "negativity 0 from t = " + short_number(*n.death_time) + " s"
                                        : "negativity still " + short_number(n.standard.back()) +
                                              " at t = " + short_number(n.times.back()) + " s"));
  }
  out.tables.emplace_back("negativity.csv", std::move(curves));
  out.tables.emplace_back("negativity-summary.csv", std::move(summary));
  out.plots.emplace_back("negativity.svg", std::move(plot));
}

}  // namespace

NegativityCurve negativity_curve(const ScenarioConfig& cfg) {
  cfg.validate();
  const FieldSpec field = cfg.field.without_rf().at_angle(cfg.negativity.theta);
  SolverOptions opts = cfg.solver;
  opts.store_trajectory = true;
  opts.t_max = cfg.negativity.t_end > 0.0 ? cfg.negativity.t_end : 5.0 / cfg.model.k;
  opts.require_convergence = false;
  opts.rf_phase_samples = 1;
  opts.step_halving_check = false;
  const DensityMatrix rho0 = initial_state(cfg.model, cfg.initial);
  const Trajectory traj = evolve(rho0, cfg.model, field, opts, cfg.flags());

  NegativityCurve out;
  out.times = traj.times;
  out.spin_population = traj.spin_population;
  for (const auto& rho : traj.states) {
    out.standard.push_back(negativity(rho, NegativityConvention::standard));
    out.paper.push_back(negativity(rho, NegativityConvention::paper));
    out.renormalized.push_back(negativity(rho, NegativityConvention::standard, true));
  }
  std::size_t first_zero = out.standard.size();
  while (first_zero > 0 && out.standard[first_zero - 1] == 0.0) --first_zero;
  if (first_zero < out.standard.size()) out.death_time = out.times[first_zero];
  return out;
}

Figure parse_figure(const std::string& name) {
  for (Figure f : all_figures()) {
    if (to_string(f) == name) return f;
  }
  throw ValidationError("figure", "unknown figure '" + name +
                                      "' (expected fig2, fig3, fig4, s-dephasing-field, s-disc, "
                                      "s-gfactor, s-2nuclei, s-noise-field)");
}

std::string to_string(Figure figure) {
  switch (figure) {
    case Figure::fig2: return "fig2";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::s_dephasing_field: return "s-dephasing-field";
    case Figure::s_disc: return "s-disc";
    case Figure::s_gfactor: return "s-gfactor";
    case Figure::s_2nuclei: return "s-2nuclei";
    case Figure::s_noise_field: return "s-noise-field";
  }
  return "fig2";
}

std::vector<Figure> all_figures() {
  return {Figure::fig2,   Figure::fig3,      Figure::fig4,      Figure::s_dephasing_field,
          Figure::s_disc, Figure::s_gfactor, Figure::s_2nuclei, Figure::s_noise_field};
}

FigureResult reproduce(Figure figure, const FigureOptions& opt) {
  FigureResult out;
  out.name = to_string(figure);
  auto variant = [&](ModelPreset preset) {
    run_panel(k_panel("rf-by-k", preset, 0.0, opt.angles), opt, out);
    run_panel(noise_panel("noise", preset, opt.angles), opt, out);
  };
  switch (figure) {
    case Figure::fig2: run_panel(k_panel("rf-by-k", ModelPreset::cigar, 0.0, opt.angles), opt, out); break;
    case Figure::fig3: run_panel(noise_panel("noise", ModelPreset::cigar, opt.angles), opt, out); break;
    case Figure::fig4: run_negativity(opt, out); break;
    case Figure::s_dephasing_field: run_panel(dephasing_panel(opt.angles), opt, out); break;
    case Figure::s_disc: variant(ModelPreset::disc); break;
    case Figure::s_gfactor: variant(ModelPreset::anisotropic_g); break;
    case Figure::s_2nuclei: variant(ModelPreset::two_nuclei); break;
    case Figure::s_noise_field:
      run_panel(k_panel("rf-by-k-noisy", ModelPreset::cigar, 0.1, opt.angles), opt, out);
      run_panel(noise_field_panel(opt.angles), opt, out);
      break;
  }
  return out;
}

std::vector<std::filesystem::path> write_figure(const FigureResult& result,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& [name, table] : result.tables) {
    const auto path = dir / (result.name + "-" + name);
    write_csv(table, path);
    written.push_back(path);
  }
  for (const auto& [name, plot] : result.plots) {
    const auto path = dir / (result.name + "-" + name);
    render_plot(plot, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace radpair

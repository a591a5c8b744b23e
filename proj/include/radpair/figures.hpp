#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radpair/csv.hpp"
#include "radpair/experiments.hpp"
#include "radpair/plot.hpp"

namespace radpair {

struct NegativityCurve {
  std::vector<double> times;
  std::vector<double> standard;
  std::vector<double> paper;
  std::vector<double> renormalized;  // standard convention on the trace-normalized spin block
  std::vector<double> spin_population;
  // First sample from which the standard negativity is 0 at every later sample.
  std::optional<double> death_time;
};

// Negativity over time at cfg.negativity.theta, static field only (rf is
// dropped). Samples every solver.trajectory_stride steps up to
// cfg.negativity.t_end (5 / k when 0).
NegativityCurve negativity_curve(const ScenarioConfig& cfg);

enum class Figure { fig2, fig3, fig4, s_dephasing_field, s_disc, s_gfactor, s_2nuclei, s_noise_field };

Figure parse_figure(const std::string& name);
std::string to_string(Figure figure);
std::vector<Figure> all_figures();

struct FigureOptions {
  int angles = 91;
  int threads = 1;
};

struct FigureResult {
  std::string name;
  std::vector<std::pair<std::string, CsvTable>> tables;  // file name, contents
  std::vector<std::pair<std::string, PlotSpec>> plots;
  std::vector<std::string> summary;
  std::size_t failures = 0;
};

// Preset grids:
//   fig2      cigar, 150 nT perpendicular resonant rf, k in {1e3, 1e4, 1e5, 1e6}
//   fig3      cigar, k = 1e4, generic noise, Gamma in {0, 0.01k, 0.1k, k, 10k}
//   fig4      cigar, k = 1e4, theta = pi/4, Gamma in {0, 0.01k, 0.1k, 0.5k, k, 2k, 10k}
//   s-dephasing-field  k = 1e4 with rf, Gamma_z in {0, 1e3, 1e4, 1e5}
//   s-disc, s-gfactor, s-2nuclei  the fig2 and fig3 grids for each model variant
//   s-noise-field  the fig2 grid with Gamma = 0.1k; k = 1e5 with Gamma in
//                  {0.01k, 0.1k, k}, each with and without rf
FigureResult reproduce(Figure figure, const FigureOptions& options = {});

// Writes every table as CSV and every plot as SVG; returns the paths written.
std::vector<std::filesystem::path> write_figure(const FigureResult& result,
                                                const std::filesystem::path& dir);

}  // namespace radpair

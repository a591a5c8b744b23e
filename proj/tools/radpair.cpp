#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <thread>

#include "radpair/config.hpp"
#include "radpair/csv.hpp"
#include "radpair/errors.hpp"
#include "radpair/figures.hpp"
#include "radpair/plot.hpp"

namespace fs = std::filesystem;
using namespace radpair;

namespace {

std::string file_stem(std::string name) {
  for (char& c : name) {
    if (c == '/' || c == '\\' || c == ' ') c = '_';
  }
  return name.empty() ? "scenario" : name;
}

void emit(const CsvTable& table, const std::string& out_dir, const std::string& file) {
  if (out_dir.empty()) {
    std::cout << to_csv(table);
    return;
  }
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / file;
  write_csv(table, path);
  std::cerr << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radical-pair compass simulator"};
  app.require_subcommand(1);

  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "Parallel workers for angular sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", "Accepted for compatibility; runs are always deterministic");

  std::string config_path;
  std::string out_dir;

  auto* sweep = app.add_subcommand("sweep", "Angular sweep of the singlet yield");
  sweep->add_option("--config", config_path, "Scenario YAML file")->required();
  sweep->add_option("--out", out_dir, "Directory for CSV and SVG output (default: CSV to stdout)");

  std::string figure_name;
  int angles = 91;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a figure preset");
  reproduce_cmd->add_option("figure", figure_name, "fig2, fig3, fig4, s-dephasing-field, s-disc, s-gfactor, "
                                                   "s-2nuclei or s-noise-field")
      ->required();
  reproduce_cmd->add_option("--out", out_dir, "Directory for CSV and SVG output (default: summary only)");
  reproduce_cmd->add_option("--angles", angles, "Points in the angle grid")->check(CLI::PositiveNumber);

  auto* negativity_cmd = app.add_subcommand("negativity", "Negativity over time at one angle");
  negativity_cmd->add_option("--config", config_path, "Scenario YAML file")->required();
  negativity_cmd->add_option("--out", out_dir, "Directory for CSV output (default: stdout)");

  std::string axis_name;
  std::vector<double> grid;
  auto* scan = app.add_subcommand("scan", "Contrast and rf disruption along one parameter");
  scan->add_option("--axis", axis_name, "k, noise or dephasing")
      ->required()
      ->check(CLI::IsMember({"k", "noise", "dephasing"}));
  scan->add_option("--grid", grid, "Comma-separated values in 1/s")->required()->delimiter(',');
  scan->add_option("--config", config_path, "Base scenario YAML file (default: built-in)");
  scan->add_option("--out", out_dir, "Directory for CSV output (default: stdout)");

  auto* validate = app.add_subcommand("validate", "Check a scenario file and print it with defaults applied");
  validate->add_option("--config", config_path, "Scenario YAML file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sweep) {
      const ScenarioConfig cfg = load_config(config_path);
      const SweepResult result = angular_sweep(cfg, threads);
      emit(sweep_table(result), out_dir, file_stem(cfg.name) + "-sweep.csv");
      if (!out_dir.empty() && cfg.write_plot) {
        const fs::path path = fs::path(out_dir) / (file_stem(cfg.name) + "-sweep.svg");
        render_plot(sweep_plot(result, cfg.field.has_rf() ? "rf" : "singlet yield"), path);
        std::cerr << "wrote " << path.string() << "\n";
      }
      if (result.failures() > 0) std::cerr << result.failures() << " angles failed\n";
    } else if (*reproduce_cmd) {
      const Figure figure = parse_figure(figure_name);
      FigureOptions opts;
      opts.angles = angles;
      opts.threads = threads;
      const FigureResult result = reproduce(figure, opts);
      for (const auto& line : result.summary) std::cout << line << "\n";
      if (!out_dir.empty()) {
        for (const auto& path : write_figure(result, out_dir)) std::cerr << "wrote " << path.string() << "\n";
      }
      if (result.failures > 0) {
        std::cerr << result.failures << " points failed\n";
        return 1;
      }
    } else if (*negativity_cmd) {
      const ScenarioConfig cfg = load_config(config_path);
      const NegativityCurve curve = negativity_curve(cfg);
      CsvTable t;
      t.comments.push_back(provenance_line(cfg.name, config_hash(cfg), solver_description(cfg)));
      if (curve.death_time) t.comments.push_back("death_time=" + format_double(*curve.death_time));
      const std::string selected = cfg.negativity.renormalize ? "negativity_renormalized [1]"
                                   : "negativity_" + to_string(cfg.negativity.convention) + " [1]";
      t.columns = {"time [s]", selected, "spin_population [1]"};
      for (std::size_t i = 0; i < curve.times.size(); ++i) {
        const double v = cfg.negativity.renormalize ? curve.renormalized[i]
                         : cfg.negativity.convention == NegativityConvention::paper ? curve.paper[i]
                                                                                    : curve.standard[i];
        t.rows.push_back({format_double(curve.times[i]), format_double(v),
                          format_double(curve.spin_population[i])});
      }
      emit(t, out_dir, file_stem(cfg.name) + "-negativity.csv");
    } else if (*scan) {
      const ScenarioConfig cfg = config_path.empty() ? parse_config("") : load_config(config_path);
      const ScanTable table = threshold_scan(parse_scan_axis(axis_name), grid, cfg, threads);
      emit(scan_table(table, provenance_line(cfg.name, config_hash(cfg), solver_description(cfg))), out_dir,
           file_stem(cfg.name) + "-scan-" + axis_name + ".csv");
    } else if (*validate) {
      const ScenarioConfig cfg = load_config(config_path);
      std::cout << to_yaml(cfg);
      std::cerr << "ok: " << config_path << " (config " << config_hash(cfg) << ")\n";
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid value for '" << e.key() << "': " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

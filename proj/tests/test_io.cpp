#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "radpair/config.hpp"
#include "radpair/csv.hpp"
#include "radpair/errors.hpp"
#include "radpair/plot.hpp"

using namespace radpair;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("radpair-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::uint64_t bits(double v) {
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return b;
}

}  // namespace

TEST_CASE("empty document gives the default scenario") {
  const ScenarioConfig c = parse_config("");
  CHECK(c.preset == ModelPreset::cigar);
  CHECK(c.model.k == 1e4);
  CHECK(c.field.b0 == 47e-6);
  CHECK(c.field.b_rf == 150e-9);
  CHECK(c.field.rf_orientation == RfOrientation::perpendicular);
  CHECK(std::abs(c.field.omega / (2 * kPi) - 1.316e6) / 1.316e6 < 1e-3);
  CHECK(c.angle_grid.size() == 91);
  CHECK(c.channels == ChannelSelection::decay_only);
  CHECK(c.solver.dt == 1e-8);
  CHECK(c.solver.resolved_t_max(c.model.k) == doctest::Approx(12.0 / c.model.k));
  CHECK(c.solver.residual_eps == 1e-4);
  CHECK(config_hash(c) == config_hash(ScenarioConfig{}));
}

TEST_CASE("negative rate is rejected with its key") {
  try {
    parse_config("model:\n  k_per_second: -1\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.key() == "model.k_per_second");
  }
}

TEST_CASE("unknown keys are rejected by name") {
  try {
    parse_config("foo: 1\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_config("field:\n  b0_gauss: 0.47\n"), doctest::Contains("b0_gauss"), ValidationError);
}

TEST_CASE("malformed YAML and bad values report the line") {
  try {
    parse_config("model:\n  k_per_second: [1, 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
  }
  try {
    parse_config("name: x\nmodel:\n  k_per_second: fast\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("config fields are read with their units") {
  const ScenarioConfig c = parse_config(R"(
name: custom
model:
  preset: two-nuclei
  k_per_second: 2.5e4
  gamma_noise_per_second: 100
field:
  b0_tesla: 5.0e-5
  b_rf_tesla: 1.5e-8
  rf_orientation: parallel
  rf_phase_samples: 4
sweep:
  theta_rad: [0.1, 0.2, 0.4]
  channels: generic-noise
  initial: dephased
solver:
  method: rk4-fixed
  dt_seconds: 5.0e-9
  path: integrate
)");
  CHECK(c.name == "custom");
  CHECK(c.model.nucleus_count() == 2);
  CHECK(c.model.k == 2.5e4);
  CHECK(c.model.gamma_noise == 100.0);
  CHECK(c.field.omega == doctest::Approx(FieldSpec::resonant_omega(5e-5)));
  CHECK(c.field.rf_orientation == RfOrientation::parallel);
  CHECK(c.solver.rf_phase_samples == 4);
  CHECK(c.angle_grid == std::vector<double>{0.1, 0.2, 0.4});
  CHECK(c.initial == InitialKind::dephased);
  CHECK(c.solver.method == Method::rk4_fixed);
  CHECK(c.path == SolvePath::integrate);
}

TEST_CASE("constraint violations name their keys") {
  auto key_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ValidationError& e) {
      return e.key();
    }
    return std::string("none");
  };
  CHECK(key_of("sweep:\n  theta_rad: [0.3, 0.1]\n") == "sweep.theta_rad");
  CHECK(key_of("sweep:\n  channels: everything\n") == "sweep.channels");
  CHECK(key_of("solver:\n  dt_seconds: 0\n") == "solver.dt_seconds");
  CHECK(key_of("model:\n  preset: sphere\n") == "model.preset");
  CHECK(key_of("field:\n  b_rf_tesla: 0\nsweep:\n  channels: noise-and-rf\n") == "sweep.channels");
  CHECK(key_of("field:\n  theta_rf_rad: 1.0\n") == "field.theta_rf_rad");
}

TEST_CASE("canonical YAML round trips") {
  ScenarioConfig c = parse_config("model:\n  preset: disc\n  gamma_z_per_second: 1.0e5\nsweep:\n  angles: 7\n  channels: dephasing\n");
  const ScenarioConfig back = parse_config(to_yaml(c));
  CHECK(to_yaml(back) == to_yaml(c));
  CHECK(back.model.nuclei[0].orientation == c.model.nuclei[0].orientation);
  CHECK(back.angle_grid == c.angle_grid);
}

TEST_CASE("doubles round trip bit for bit through CSV text") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> values = {0.0, -0.0, 1.0 / 3.0, 1e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min(),
                                std::numeric_limits<double>::max()};
  for (int i = 0; i < 1000; ++i) values.push_back(u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20));
  CsvTable t;
  t.comments.push_back("test");
  t.columns = {"value [1]"};
  for (double v : values) t.rows.push_back({format_double(v)});
  const CsvTable back = parse_csv(to_csv(t));
  REQUIRE(back.rows.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(bits(back.number(i, "value [1]")) == bits(values[i]));
  CHECK(std::isnan(parse_double(format_double(std::nan("")))));
  CHECK_THROWS(parse_double("1.0x"));
}

TEST_CASE("sweep CSV layout") {
  SweepResult r;
  r.scenario = "s";
  r.config_hash = "0123456789abcdef";
  r.solver_description = "method=expm-piecewise";
  for (int i = 0; i < 91; ++i) r.points.push_back({0.01 * i, 0.3, 0.7});
  const fs::path dir = scratch_dir("sweep");
  write_csv(r, dir / "s.csv");
  std::ifstream in(dir / "s.csv");
  std::string line;
  int comments = 0, lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    if (line[0] == '#') ++comments;
  }
  CHECK(lines == comments + 1 + 91);
  const CsvTable t = read_csv(dir / "s.csv");
  CHECK(t.comments[0].find("0123456789abcdef") != std::string::npos);
  CHECK(t.comments[0].find("method=expm-piecewise") != std::string::npos);
  CHECK(t.columns[0] == "theta [rad]");
  CHECK(t.number(90, "theta [rad]") == 0.01 * 90);
}

TEST_CASE("empty trajectory gives a header-only file") {
  const fs::path dir = scratch_dir("traj");
  write_csv(Trajectory{}, "empty", dir / "t.csv");
  const CsvTable t = read_csv(dir / "t.csv");
  CHECK(t.rows.empty());
  CHECK(t.columns.size() == 7);
  CHECK(t.columns[0] == "time [s]");
}

TEST_CASE("writing to a missing directory fails") {
  CHECK_THROWS_AS(write_csv(CsvTable{}, "/nonexistent-dir/x.csv"), Error);
}

TEST_CASE("plot: single point becomes a marker") {
  PlotSpec p;
  p.series.push_back({"one", {0.25}, {0.3}});
  const std::string svg = to_svg(p);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("singlet yield") != std::string::npos);
}

TEST_CASE("plot ranges enclose every point including offsets") {
  PlotSpec p;
  p.series.push_back({"a", {0.0, 0.5}, {0.30, 0.40}, 0.001});
  p.series.push_back({"b", {0.1, 0.2, 0.3}, {0.25, std::nan(""), 0.45}});
  const AxisRange x = x_range(p), y = y_range(p);
  CHECK(x.lo <= 0.0);
  CHECK(x.hi >= 0.5);
  CHECK(y.lo <= 0.25);
  CHECK(y.hi >= 0.45);
  CHECK(y.hi >= 0.401);
  const std::string svg = to_svg(p);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find(">a<") != std::string::npos);
}

TEST_CASE("plot of nothing is an error") {
  CHECK_THROWS_AS(to_svg(PlotSpec{}), Error);
  PlotSpec p;
  p.series.push_back({"empty", {}, {}});
  CHECK_THROWS_AS(to_svg(p), Error);
}

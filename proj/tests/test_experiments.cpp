#include <doctest.h>

#include <cmath>

#include "radpair/config.hpp"
#include "radpair/csv.hpp"
#include "radpair/errors.hpp"
#include "radpair/experiments.hpp"
#include "radpair/figures.hpp"

using namespace radpair;

namespace {

ScenarioConfig static_scenario(int angles) {
  ScenarioConfig c;
  c.field = c.field.without_rf();
  c.angle_grid = uniform_angle_grid(angles);
  return c;
}

}  // namespace

TEST_CASE("angle grids") {
  const auto g = uniform_angle_grid(91);
  CHECK(g.size() == 91);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(kPi / 2));
  CHECK(uniform_angle_grid(1) == std::vector<double>{0.0});
  CHECK_THROWS(uniform_angle_grid(0));
  ScenarioConfig c;
  c.angle_grid = {0.0, 0.5, 0.5};
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c.angle_grid = {0.0, 2.0};
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("static sweep of the cigar model has a positive contrast") {
  const SweepResult r = angular_sweep(static_scenario(100));
  CHECK(r.points.size() == 100);
  CHECK(r.contrast > 0.05);
  CHECK_FALSE(r.reference);
  for (std::size_t i = 1; i < r.points.size(); ++i) CHECK(r.points[i].theta > r.points[i - 1].theta);
  CHECK(r.points.front().method == "linear-solve");
}

TEST_CASE("strong noise removes more than half the contrast") {
  ScenarioConfig c = static_scenario(31);
  const double clean = angular_sweep(c).contrast;
  c.channels = ChannelSelection::generic_noise;
  c.model.gamma_noise = 10.0 * c.model.k;
  CHECK(angular_sweep(c).contrast < 0.5 * clean);
}

TEST_CASE("single-angle sweep") {
  const SweepResult r = angular_sweep(static_scenario(1));
  CHECK(r.points.size() == 1);
  CHECK(r.contrast == 0.0);
}

TEST_CASE("sweeps are bit-identical for any thread count") {
  ScenarioConfig c;
  c.angle_grid = uniform_angle_grid(7);
  const SweepResult one = angular_sweep(c, 1);
  const SweepResult three = angular_sweep(c, 3);
  CHECK(to_csv(sweep_table(one)) == to_csv(sweep_table(three)));
  REQUIRE(one.disruption);
  CHECK(*one.disruption > 0.0);
}

TEST_CASE("failed angles are recorded as gaps") {
  ScenarioConfig c = static_scenario(5);
  c.path = SolvePath::integrate;
  c.solver.dt = 1e-7;  // too coarse: every point fails validation
  const SweepResult r = angular_sweep(c);
  CHECK(r.failures() == 5);
  for (const auto& p : r.points) {
    CHECK_FALSE(p.ok);
    CHECK(std::isnan(p.phi_s));
    CHECK(p.error.find("solver.dt_seconds") != std::string::npos);
  }
  CHECK(std::isnan(r.contrast));
}

TEST_CASE("integration path matches the linear-solve path") {
  ScenarioConfig c = static_scenario(5);
  const SweepResult direct = angular_sweep(c);
  c.path = SolvePath::integrate;
  const SweepResult integrated = angular_sweep(c);
  for (std::size_t i = 0; i < direct.points.size(); ++i) {
    CHECK(std::abs(direct.points[i].phi_s - integrated.points[i].phi_s) < 1e-6);
  }
}

TEST_CASE("noise scan: contrast never increases with the rate") {
  ScenarioConfig c = static_scenario(19);
  const double k = c.model.k;
  const ScanTable t = threshold_scan(ScanAxis::gamma_noise, {0.01 * k, 0.1 * k, k, 10 * k}, c);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows.front().contrast <= t.zero_rate_contrast);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].contrast <= t.rows[i - 1].contrast);
  REQUIRE(t.halving_rate);
  CHECK(*t.halving_rate > 0.1 * k);
  CHECK(*t.halving_rate <= 10 * k);
}

TEST_CASE("scan without hyperfine coupling sees no contrast") {
  ScenarioConfig c = static_scenario(7);
  c.preset = ModelPreset::none;
  c.model = make_model(ModelPreset::none, 1e4);
  const ScanTable t = threshold_scan(ScanAxis::k, {1e3, 1e5}, c);
  for (const auto& row : t.rows) {
    CHECK(row.contrast < 1e-9);
    CHECK(row.disruption < 1e-9);
  }
}

TEST_CASE("k scan switches on the rf field and reports a threshold") {
  ScenarioConfig c = static_scenario(10);
  const ScanTable t = threshold_scan(ScanAxis::k, {1e3, 1e4, 1e5, 1e6}, c);
  for (const auto& row : t.rows) CHECK(std::isfinite(row.disruption));
  REQUIRE(t.k_threshold);
  CHECK(*t.k_threshold == 1e4);
  REQUIRE(t.k_threshold_interpolated);
  CHECK(*t.k_threshold_interpolated > 1e4);
  CHECK(*t.k_threshold_interpolated < 1e5);
  CHECK_THROWS_AS(threshold_scan(ScanAxis::k, {}, c), ValidationError);
  CHECK_THROWS_AS(threshold_scan(ScanAxis::k, {-1.0}, c), ValidationError);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 7) throw Error("boom");
  }));
}

TEST_CASE("figure names") {
  for (Figure f : all_figures()) CHECK(parse_figure(to_string(f)) == f);
  CHECK_THROWS_AS(parse_figure("fig9"), ValidationError);
}

TEST_CASE("fig3 preset with a coarse grid") {
  FigureOptions o;
  o.angles = 5;
  const FigureResult r = reproduce(Figure::fig3, o);
  CHECK(r.failures == 0);
  REQUIRE(r.tables.size() == 2);
  CHECK(r.tables[0].second.rows.size() == 5 * 5);
  CHECK(r.tables[1].second.rows.size() == 5);
  REQUIRE(r.plots.size() == 1);
  CHECK(r.plots[0].second.series.size() == 5);
}

TEST_CASE("fig2 plot has one reference series plus one per k") {
  FigureOptions o;
  o.angles = 3;
  const FigureResult r = reproduce(Figure::fig2, o);
  REQUIRE(r.plots.size() == 1);
  const PlotSpec& p = r.plots[0].second;
  CHECK(p.series.size() == 5);
  CHECK(p.series[0].y_offset == 0.001);
  // Data files keep the unshifted reference.
  const CsvTable& yields = r.tables[0].second;
  CHECK(yields.rows[0][0] == "reference");
  CHECK(parse_double(yields.rows[0][7]) == p.series[0].y[0]);
}

TEST_CASE("negativity curve dies under strong noise and survives without it") {
  ScenarioConfig c = static_scenario(1);
  c.channels = ChannelSelection::generic_noise;
  c.model.gamma_noise = c.model.k;
  c.negativity.t_end = 1e-4;
  const NegativityCurve noisy = negativity_curve(c);
  CHECK(noisy.standard.front() == doctest::Approx(0.5));
  REQUIRE(noisy.death_time);
  for (std::size_t i = 0; i < noisy.times.size(); ++i) {
    if (noisy.times[i] >= *noisy.death_time) CHECK(noisy.standard[i] == 0.0);
  }
  c.model.gamma_noise = 0.0;
  const NegativityCurve clean = negativity_curve(c);
  CHECK_FALSE(clean.death_time);
}

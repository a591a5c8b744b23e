#include "radpair/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "radpair/errors.hpp"

namespace radpair {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#000000", "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};

double tx(const PlotSpec& s, double x) { return s.log_x ? std::log10(x) : x; }

bool usable(const PlotSpec& s, double x, double y) {
  return std::isfinite(x) && std::isfinite(y) && (!s.log_x || x > 0.0);
}

AxisRange pad(double lo, double hi) {
  if (!(lo <= hi)) return {0.0, 1.0};
  double span = hi - lo;
  if (span == 0.0) span = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
  return {lo - 0.05 * span, hi + 0.05 * span};
}

template <typename F>
AxisRange range_of(const PlotSpec& s, F value) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& ser : s.series) {
    for (std::size_t i = 0; i < ser.x.size() && i < ser.y.size(); ++i) {
      if (!usable(s, ser.x[i], ser.y[i])) continue;
      const double v = value(ser, i);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo)) throw Error("plot: no finite data points");
  return pad(lo, hi);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

AxisRange x_range(const PlotSpec& s) {
  return range_of(s, [&](const Series& ser, std::size_t i) { return tx(s, ser.x[i]); });
}

AxisRange y_range(const PlotSpec& s) {
  return range_of(s, [](const Series& ser, std::size_t i) { return ser.y[i] + ser.y_offset; });
}

std::string to_svg(const PlotSpec& s) {
  if (s.series.empty()) throw Error("plot: nothing to draw");
  const AxisRange xr = x_range(s);
  const AxisRange yr = y_range(s);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (tx(s, x) - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!s.title.empty()) {
    o << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(s.title) << "</text>\n";
  }
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double u = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double xp = kLeft + pw * i / 5.0;
    o << "<line x1=\"" << coord(xp) << "\" y1=\"" << kTop + ph << "\" x2=\"" << coord(xp) << "\" y2=\""
      << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << coord(xp) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
      << (s.log_x ? "1e" + fmt(u) : fmt(u)) << "</text>\n";
    const double v = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    const double yp = kTop + ph - ph * i / 5.0;
    o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << coord(yp) << "\" x2=\"" << kLeft << "\" y2=\""
      << coord(yp) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << kLeft - 8 << "\" y=\"" << coord(yp + 4) << "\" text-anchor=\"end\">" << fmt(v)
      << "</text>\n";
  }
  o << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"" << kHeight - 15
    << "\" text-anchor=\"middle\">" << escape(s.x_label) << "</text>\n";
  o << "<text transform=\"translate(20," << coord(kTop + ph / 2)
    << ") rotate(-90)\" text-anchor=\"middle\">" << escape(s.y_label) << "</text>\n";

  for (std::size_t k = 0; k < s.series.size(); ++k) {
    const Series& ser = s.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < ser.x.size() && i < ser.y.size(); ++i) {
      if (usable(s, ser.x[i], ser.y[i])) pts.emplace_back(px(ser.x[i]), py(ser.y[i] + ser.y_offset));
    }
    if (pts.size() == 1) {
      o << "<circle cx=\"" << coord(pts[0].first) << "\" cy=\"" << coord(pts[0].second)
        << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    } else if (pts.size() > 1) {
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        o << (i ? " " : "") << coord(pts[i].first) << "," << coord(pts[i].second);
      }
      o << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
    const double lx = kLeft + pw + 15;
    o << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly) << "\" x2=\"" << coord(lx + 20) << "\" y2=\""
      << coord(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << coord(lx + 26) << "\" y=\"" << coord(ly + 4) << "\">" << escape(ser.label)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void render_plot(const PlotSpec& spec, const std::filesystem::path& path) {
  const std::string svg = to_svg(spec);
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << svg;
}

Series sweep_series(const std::vector<YieldPoint>& points, const std::string& label) {
  Series s;
  s.label = label;
  for (const auto& p : points) {
    s.x.push_back(p.theta / kPi);
    s.y.push_back(p.ok ? p.phi_s : std::numeric_limits<double>::quiet_NaN());
  }
  return s;
}

PlotSpec sweep_plot(const SweepResult& r, const std::string& label) {
  PlotSpec spec;
  spec.title = r.scenario;
  if (r.reference) spec.series.push_back(sweep_series(*r.reference, "no rf"));
  spec.series.push_back(sweep_series(r.points, label));
  return spec;
}

}  // namespace radpair

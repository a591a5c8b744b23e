#include "radpair/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "radpair/errors.hpp"

namespace radpair {

namespace {

std::string clean_cell(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw Error("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error("no column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  return parse_double(rows.at(row).at(column(name)));
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream o;
  for (const auto& c : table.comments) o << "# " << c << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) o << (i ? "," : "") << table.columns[i];
  o << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << row[i];
    o << "\n";
  }
  return o.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
    } else if (!header) {
      t.columns = split(line);
      header = true;
    } else {
      t.rows.push_back(split(line));
    }
  }
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << to_csv(table);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

std::string provenance_line(const std::string& scenario, const std::string& hash,
                            const std::string& solver) {
  return "scenario=" + scenario + " config=" + hash + " " + solver;
}

CsvTable sweep_table(const SweepResult& r) {
  CsvTable t;
  t.comments.push_back(provenance_line(r.scenario, r.config_hash, r.solver_description));
  t.comments.push_back("contrast=" + format_double(r.contrast) +
                       (r.disruption ? " disruption=" + format_double(*r.disruption) : ""));
  t.columns = {"theta [rad]", "theta/pi [1]", "phi_s [1]", "phi_t [1]"};
  if (r.reference) {
    t.columns.insert(t.columns.end(), {"phi_s_no_rf [1]", "phi_t_no_rf [1]"});
  }
  t.columns.insert(t.columns.end(), {"method", "status"});
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    std::vector<std::string> row = {format_double(p.theta), format_double(p.theta / kPi),
                                    format_double(p.phi_s), format_double(p.phi_t)};
    std::string status = p.ok ? "ok" : "failed: " + p.error;
    if (r.reference) {
      const auto& q = (*r.reference)[i];
      row.push_back(format_double(q.phi_s));
      row.push_back(format_double(q.phi_t));
      if (!q.ok) status = "failed: " + q.error;
    }
    row.push_back(clean_cell(p.method));
    row.push_back(clean_cell(status));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable trajectory_table(const Trajectory& traj, const std::string& provenance) {
  CsvTable t;
  t.comments.push_back(provenance);
  t.columns = {"time [s]",       "shelf_s [1]",         "shelf_t [1]", "spin_population [1]",
               "singlet_probability [1]", "trace [1]", "min_eigenvalue [1]"};
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    t.rows.push_back({format_double(traj.times[i]), format_double(traj.shelf_s[i]),
                      format_double(traj.shelf_t[i]), format_double(traj.spin_population[i]),
                      format_double(traj.singlet_probability[i]), format_double(traj.trace[i]),
                      format_double(traj.min_eigenvalue[i])});
  }
  return t;
}

CsvTable scan_table(const ScanTable& s, const std::string& provenance) {
  CsvTable t;
  t.comments.push_back(provenance);
  std::string summary = "axis=" + to_string(s.axis);
  if (s.k_threshold) summary += " k_threshold=" + format_double(*s.k_threshold);
  if (s.k_threshold_interpolated) {
    summary += " k_threshold_interpolated=" + format_double(*s.k_threshold_interpolated);
  }
  if (s.axis != ScanAxis::k) summary += " zero_rate_contrast=" + format_double(s.zero_rate_contrast);
  if (s.halving_rate) summary += " halving_rate=" + format_double(*s.halving_rate);
  t.comments.push_back(summary);
  const std::string name = s.axis == ScanAxis::k ? "k [1/s]"
                           : s.axis == ScanAxis::gamma_noise ? "gamma_noise [1/s]"
                                                             : "gamma_z [1/s]";
  t.columns = {name, "contrast [1]", "disruption [1]"};
  for (const auto& row : s.rows) {
    t.rows.push_back({format_double(row.value), format_double(row.contrast), format_double(row.disruption)});
  }
  return t;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_csv(sweep_table(result), path);
}

void write_csv(const Trajectory& traj, const std::string& provenance, const std::filesystem::path& path) {
  write_csv(trajectory_table(traj, provenance), path);
}

void write_csv(const ScanTable& table, const std::string& provenance, const std::filesystem::path& path) {
  write_csv(scan_table(table, provenance), path);
}

}  // namespace radpair

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "radpair/experiments.hpp"

namespace radpair {

// 17 significant digits; parse_double(format_double(v)) == v bit for bit.
std::string format_double(double v);
double parse_double(std::string_view text);

/// Comment lines start with '#'; the first one carries provenance. Column
/// names carry their unit in brackets, e.g. "theta [rad]".
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws if absent
  double number(std::size_t row, const std::string& name) const;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const CsvTable& table, const std::filesystem::path& path);

std::string provenance_line(const std::string& scenario, const std::string& hash,
                            const std::string& solver);

CsvTable sweep_table(const SweepResult& result);
CsvTable trajectory_table(const Trajectory& traj, const std::string& provenance);
CsvTable scan_table(const ScanTable& table, const std::string& provenance);

void write_csv(const SweepResult& result, const std::filesystem::path& path);
void write_csv(const Trajectory& traj, const std::string& provenance, const std::filesystem::path& path);
void write_csv(const ScanTable& table, const std::string& provenance, const std::filesystem::path& path);

}  // namespace radpair

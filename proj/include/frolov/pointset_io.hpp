#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frolov/cubature_rule.hpp"

namespace frolov {

/// On-disk point set:
///
///     frolovpts 1
///     d=<d> n=<n> N=<N> method=<label>
///     <N rows of d coordinates, 17 significant digits, single spaces>
///
/// `n=` is omitted when the set has no scaling parameter.
struct PointSetFile {
  int d = 0;
  std::optional<double> n;
  std::string method;
  PointMatrix points;
};

inline constexpr const char* kPointSetTag = "frolovpts";
inline constexpr int kPointSetVersion = 1;

void write_pointset(std::ostream& out, const PointSetFile& file);
std::string serialize_pointset(const PointSetFile& file);
/// Throws IoError when the file cannot be written.
void write_pointset_file(const std::string& path, const PointSetFile& file);

/// Throws ParseError (with line number) for malformed content and
/// ValidationError for coordinates outside [0,1].
PointSetFile parse_pointset(std::istream& in);
/// Throws IoError when the file cannot be opened.
PointSetFile read_pointset_file(const std::string& path);

/// One CSV line of an experiment sweep.
struct ExperimentRow {
  std::string method;
  int d = 0;
  std::string r;  // comma-joined
  std::size_t n_points = 0;
  double absolute_wce = 0.0;
  double normalized_wce = 0.0;
  double wall_time_s = 0.0;
  bool clamped = false;
};

inline constexpr const char* kExperimentCsvHeader = "method,d,r,N,abs_wce,norm_wce,wall_time_s,clamped";

std::string format_csv_row(const ExperimentRow& row);
/// Appends rows, writing the header first when the file is new or empty.
void append_experiment_rows(const std::string& path, const std::vector<ExperimentRow>& rows);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

}  // namespace frolov

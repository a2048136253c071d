#include "frolov/pointset_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frolov/errors.hpp"

namespace frolov {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_pointset(std::ostream& out, const PointSetFile& file) {
  out << kPointSetTag << ' ' << kPointSetVersion << '\n';
  out << "d=" << file.d;
  if (file.n) out << " n=" << format_double(*file.n);
  out << " N=" << file.points.rows() << " method=" << file.method << '\n';
  for (Eigen::Index i = 0; i < file.points.rows(); ++i) {
    for (Eigen::Index j = 0; j < file.points.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(file.points(i, j));
    }
    out << '\n';
  }
}

std::string serialize_pointset(const PointSetFile& file) {
  std::ostringstream out;
  write_pointset(out, file);
  return out.str();
}

void write_pointset_file(const std::string& path, const PointSetFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_pointset(out, file);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

namespace {

bool parse_number(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

PointSetFile parse_pointset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty file", 1);
  ++line_no;
  {
    std::istringstream tag(line);
    std::string name;
    int version = 0;
    if (!(tag >> name >> version) || name != kPointSetTag)
      throw ParseError("expected header '" + std::string(kPointSetTag) + " 1'", line_no);
    if (version != kPointSetVersion) throw ParseError("unsupported format version " + std::to_string(version), line_no);
  }

  if (!std::getline(in, line)) throw ParseError("missing metadata line", 2);
  ++line_no;
  PointSetFile file;
  long long declared = -1;
  {
    std::istringstream meta(line);
    std::string field;
    bool have_d = false;
    while (meta >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError("malformed field '" + field + "'", line_no);
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "d") {
        double v;
        if (!parse_number(value, v) || v < 1 || v != std::floor(v)) throw ParseError("invalid d", line_no);
        file.d = static_cast<int>(v);
        have_d = true;
      } else if (key == "n") {
        double v;
        if (!parse_number(value, v) || !(v > 0)) throw ParseError("invalid n", line_no);
        file.n = v;
      } else if (key == "N") {
        double v;
        if (!parse_number(value, v) || v < 0 || v != std::floor(v)) throw ParseError("invalid N", line_no);
        declared = static_cast<long long>(v);
      } else if (key == "method") {
        file.method = value;
      } else {
        throw ParseError("unknown field '" + key + "'", line_no);
      }
    }
    if (!have_d || declared < 0) throw ParseError("metadata must contain d= and N=", line_no);
  }

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(declared) * file.d);
  long long rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (rows == declared) throw ParseError("more rows than N=" + std::to_string(declared), line_no);
    std::istringstream row(line);
    std::string token;
    int count = 0;
    while (row >> token) {
      double v;
      if (!parse_number(token, v)) throw ParseError("cannot parse coordinate '" + token + "'", line_no);
      if (v < 0.0 || v > 1.0) throw ValidationError("coordinate " + token + " outside [0,1]", line_no);
      values.push_back(v);
      ++count;
    }
    if (count != file.d)
      throw ParseError("expected " + std::to_string(file.d) + " coordinates, found " + std::to_string(count), line_no);
    ++rows;
  }
  if (rows != declared)
    throw ParseError("header declares N=" + std::to_string(declared) + " but file has " + std::to_string(rows) +
                         " rows",
                     line_no);
  file.points = Eigen::Map<PointMatrix>(values.data(), static_cast<Eigen::Index>(rows), file.d);
  return file;
}

PointSetFile read_pointset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_pointset(in);
}

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

}  // namespace

std::string format_csv_row(const ExperimentRow& row) {
  std::ostringstream out;
  out << csv_field(row.method) << ',' << row.d << ",\"" << row.r << "\"," << row.n_points << ',' << format_double(row.absolute_wce)
      << ',' << format_double(row.normalized_wce) << ',' << format_double(row.wall_time_s) << ','
      << (row.clamped ? 1 : 0);
  return out.str();
}

void append_experiment_rows(const std::string& path, const std::vector<ExperimentRow>& rows) {
  std::error_code ec;
  const bool need_header = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (need_header) out << kExperimentCsvHeader << '\n';
  for (const auto& row : rows) out << format_csv_row(row) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace frolov

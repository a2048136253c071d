#include "frolov/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "frolov/comparison_rules.hpp"
#include "frolov/enumerator.hpp"
#include "frolov/error_bounds.hpp"
#include "frolov/errors.hpp"
#include "frolov/pointset_io.hpp"
#include "frolov/wce_engine.hpp"

namespace frolov::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PolynomialFamily parse_family(const std::string& name) {
  if (name == "improved") return PolynomialFamily::improved;
  if (name == "classical") return PolynomialFamily::classical;
  throw InvalidArgument("unknown polynomial family '" + name + "' (expected improved or classical)");
}

std::vector<double> ladder(double nmin, double nmax, double factor) {
  if (!(nmin > 0) || !(nmax >= nmin)) throw InvalidArgument("need 0 < nmin <= nmax");
  if (!(factor > 1)) throw InvalidArgument("ladder factor must be > 1");
  std::vector<double> values;
  for (double n = nmin; n <= nmax * (1 + 1e-12); n *= factor) values.push_back(n);
  return values;
}

ExperimentRow evaluate_rule(const CubatureRule& rule, const SmoothnessVector& r, const WceOptions& options,
                            double setup_seconds) {
  const auto start = Clock::now();
  const WceReport report = worst_case_error(rule, r, options);
  ExperimentRow row;
  row.method = rule.method;
  row.d = r.dimension();
  row.r = r.to_string();
  row.n_points = rule.size();
  row.absolute_wce = report.absolute_wce;
  row.normalized_wce = report.normalized_wce;
  row.wall_time_s = setup_seconds + seconds_since(start);
  row.clamped = report.clamped;
  return row;
}

void emit_rows(const std::string& path, const std::vector<ExperimentRow>& rows, std::ostream& out) {
  if (path.empty()) {
    out << kExperimentCsvHeader << '\n';
    for (const auto& row : rows) out << format_csv_row(row) << '\n';
  } else {
    append_experiment_rows(path, rows);
  }
}

Accumulation parse_accumulation(const std::string& name) {
  if (name == "compensated") return Accumulation::compensated;
  if (name == "double_double") return Accumulation::double_double;
  throw InvalidArgument("unknown accumulation mode '" + name + "'");
}

// Builds the built-in rule named by `method` with size parameter `size`
// (scaling n for Frolov, level for sparse grids, index m for Fibonacci).
CubatureRule builtin_rule(const std::string& method, int d, double size) {
  if (method == "improved" || method == "classical") return frolov_rule(parse_family(method), d, size);
  if (method == "sparsegrid") return sparse_grid_rule({static_cast<int>(size), d});
  if (method == "fibonacci") {
    if (d != 2) throw InvalidArgument("the Fibonacci lattice is two-dimensional");
    return fibonacci_rule(static_cast<int>(size));
  }
  throw InvalidArgument("unknown method '" + method + "'");
}

struct GenerateArgs {
  int d = 2;
  double n = 1024;
  std::string family = "improved";
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const PolynomialFamily family = parse_family(a.family);
  const GeneratingPolynomial p = family == PolynomialFamily::improved ? get_improved(a.d) : get_classical(a.d);
  const ScaledBasis basis = scale_for_n(stable_representation(p), a.n);
  EnumerationResult e = enumerate(basis);
  PointSetFile file;
  file.d = a.d;
  file.n = a.n;
  file.method = "frolov-" + a.family;
  file.points = std::move(e.points);
  write_pointset_file(a.out, file);
  out << "N=" << file.points.rows() << " wall_time_s=" << format_double(seconds_since(start)) << '\n';
  return kExitOk;
}

struct WceArgs {
  std::string points;
  std::string method;
  int d = 2;
  double n = 1024;
  int level = -1;
  int m = -1;
  std::string r;
  std::string out;
  std::string accumulation = "compensated";
};

int cmd_wce(const WceArgs& a, std::ostream& out) {
  const SmoothnessVector r = SmoothnessVector::parse(a.r);
  WceOptions options;
  options.accumulation = parse_accumulation(a.accumulation);
  const auto start = Clock::now();
  CubatureRule rule;
  if (!a.points.empty()) {
    rule = load_pointset(a.points);
    if (rule.d != r.dimension())
      throw InvalidArgument("point set has d=" + std::to_string(rule.d) + " but r has " +
                            std::to_string(r.dimension()) + " components");
  } else if (!a.method.empty()) {
    if (a.d != r.dimension()) throw InvalidArgument("--d does not match the length of --r");
    double size = a.n;
    if (a.method == "sparsegrid") size = a.level;
    if (a.method == "fibonacci") size = a.m;
    if (size < 0) throw InvalidArgument("sparsegrid needs --level, fibonacci needs --m");
    rule = builtin_rule(a.method, a.d, size);
  } else {
    throw InvalidArgument("wce needs --points or --method");
  }
  const double setup = seconds_since(start);
  emit_rows(a.out, {evaluate_rule(rule, r, options, setup)}, out);
  return kExitOk;
}

struct CompareArgs {
  int d = 2;
  std::string r;
  std::vector<std::string> methods;
  double nmin = 256;
  double nmax = 16384;
  double factor = 4;
  std::string out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  if (a.methods.empty()) throw InvalidArgument("compare needs at least one method");
  const SmoothnessVector r = SmoothnessVector::parse(a.r);
  if (a.d != r.dimension()) throw InvalidArgument("--d does not match the length of --r");
  const auto ns = ladder(a.nmin, a.nmax, a.factor);

  std::vector<ExperimentRow> rows;
  for (const auto& method : a.methods) {
    if (method == "improved" || method == "classical") {
      for (double n : ns) {
        const auto start = Clock::now();
        CubatureRule rule = builtin_rule(method, a.d, n);
        rows.push_back(evaluate_rule(rule, r, {}, seconds_since(start)));
      }
    } else if (method == "sparsegrid") {
      for (int level = 0;; ++level) {
        if (sparse_grid_size({level, a.d}) > 8 * static_cast<std::uint64_t>(a.nmax)) break;
        const auto start = Clock::now();
        CubatureRule rule = sparse_grid_rule({level, a.d});
        if (static_cast<double>(rule.size()) > a.nmax) break;
        if (static_cast<double>(rule.size()) < a.nmin) continue;
        rows.push_back(evaluate_rule(rule, r, {}, seconds_since(start)));
      }
    } else if (method == "fibonacci") {
      if (a.d != 2) throw InvalidArgument("the Fibonacci lattice is two-dimensional");
      for (int m = 2; static_cast<double>(fibonacci(m)) <= a.nmax; ++m) {
        if (static_cast<double>(fibonacci(m)) < a.nmin) continue;
        const auto start = Clock::now();
        CubatureRule rule = fibonacci_rule(m);
        rows.push_back(evaluate_rule(rule, r, {}, seconds_since(start)));
      }
    } else {
      throw InvalidArgument("unknown method '" + method + "'");
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& x, const ExperimentRow& y) {
    return std::tie(x.method, x.n_points) < std::tie(y.method, y.n_points);
  });
  emit_rows(a.out, rows, out);
  return kExitOk;
}

struct BoundArgs {
  int d = 2;
  std::string r;
  std::string family = "improved";
  double nmin = 256;
  double nmax = 65536;
  double factor = 4;
  std::string out;
};

inline constexpr const char* kBoundCsvHeader = "n,d,r,D_P,B_P_upper,bound";

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const SmoothnessVector r = SmoothnessVector::parse(a.r);
  if (a.d != r.dimension()) throw InvalidArgument("--d does not match the length of --r");
  const PolynomialFamily family = parse_family(a.family);
  const GeneratingPolynomial p = family == PolynomialFamily::improved ? get_improved(a.d) : get_classical(a.d);
  const LatticeBasis basis = stable_representation(p);

  std::ostringstream csv;
  csv << kBoundCsvHeader << '\n';
  for (double n : ladder(a.nmin, a.nmax, a.factor)) {
    const double bound = theoretical_bound({n, r, basis.discriminant(), basis.b_p_upper()});
    csv << format_double(n) << ',' << a.d << ",\"" << r.to_string() << "\"," << format_double(basis.discriminant())
        << ',' << format_double(basis.b_p_upper()) << ',' << format_double(bound) << '\n';
  }
  if (a.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(a.out, std::ios::trunc);
    if (!file) throw IoError("cannot open '" + a.out + "' for writing");
    file << csv.str();
    if (!file) throw IoError("failed writing '" + a.out + "'");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frolov lattice cubature: point generation and exact worst-case errors"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Enumerate a Frolov lattice in [0,1]^d and write a point set");
  generate->add_option("--d", gen.d, "Dimension")->required();
  generate->add_option("--n", gen.n, "Scaling parameter (approximate point count)");
  generate->add_option("--family", gen.family, "improved | classical");
  generate->add_option("--out", gen.out, "Output point-set file")->required();

  WceArgs wce;
  auto* wce_cmd = app.add_subcommand("wce", "Worst-case error of one cubature rule");
  wce_cmd->add_option("--points", wce.points, "Point-set file");
  wce_cmd->add_option("--method", wce.method, "improved | classical | sparsegrid | fibonacci");
  wce_cmd->add_option("--d", wce.d, "Dimension of a built-in method");
  wce_cmd->add_option("--n", wce.n, "Frolov scaling parameter");
  wce_cmd->add_option("--level", wce.level, "Sparse grid level");
  wce_cmd->add_option("--m", wce.m, "Fibonacci index");
  wce_cmd->add_option("--r", wce.r, "Smoothness vector, e.g. 2,2")->required();
  wce_cmd->add_option("--out", wce.out, "CSV file to append to (stdout if omitted)");
  wce_cmd->add_option("--accumulation", wce.accumulation, "compensated | double_double");

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Worst-case error sweep over several methods");
  compare->add_option("--d", cmp.d, "Dimension")->required();
  compare->add_option("--r", cmp.r, "Smoothness vector")->required();
  compare->add_option("--methods", cmp.methods, "Methods, comma separated")->delimiter(',');
  compare->add_option("--nmin", cmp.nmin, "Smallest n");
  compare->add_option("--nmax", cmp.nmax, "Largest n");
  compare->add_option("--factor", cmp.factor, "Ladder factor between consecutive n");
  compare->add_option("--out", cmp.out, "CSV file to append to (stdout if omitted)");

  BoundArgs bnd;
  auto* bound = app.add_subcommand("bound", "Explicit Frolov error bound over a ladder of n");
  bound->add_option("--d", bnd.d, "Dimension")->required();
  bound->add_option("--r", bnd.r, "Smoothness vector")->required();
  bound->add_option("--family", bnd.family, "improved | classical");
  bound->add_option("--nmin", bnd.nmin, "Smallest n");
  bound->add_option("--nmax", bnd.nmax, "Largest n");
  bound->add_option("--factor", bnd.factor, "Ladder factor between consecutive n");
  bound->add_option("--out", bnd.out, "CSV output file (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*wce_cmd) return cmd_wce(wce, out);
    if (*compare) return cmd_compare(cmp, out);
    if (*bound) return cmd_bound(bnd, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UnsupportedDimension& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedSmoothness& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace frolov::cli

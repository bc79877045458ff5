#include "sphtopo_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sphtopo/analytic.hpp"
#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"
#include "sphtopo/identity_suite.hpp"
#include "sphtopo/io.hpp"
#include "sphtopo/montecarlo.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo::cli {

namespace {

constexpr const char* kParallelismEnv = "SPHTOPO_PARALLELISM";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    const double v = parse_real(text);
    if (std::isnan(v)) throw IoError("nan");
    return v;
  } catch (const IoError&) {
    throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  }
}

// Snaps range nodes to 12 decimals so "0:1:0.1" yields 0.3 rather than
// 0.30000000000000004.
double snap(double x) { return std::round(x * 1e12) / 1e12; }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

int default_parallelism() {
  const char* env = std::getenv(kParallelismEnv);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw UsageError(std::string(kParallelismEnv) + " must be a non-negative integer");
  }
  return static_cast<int>(v);
}

// ---- synth ---------------------------------------------------------------

struct SynthArgs {
  int ell = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void add_synth(CLI::App& app, SynthArgs& a) {
  auto* cmd = app.add_subcommand("synth", "Draw a random eigenfunction and write it as JSON");
  cmd->add_option("--ell", a.ell, "Degree (>= 1)")->required();
  cmd->add_option("--seed", a.seed, "64-bit seed")->required();
  cmd->add_option("--out", a.out, "Output JSON path")->required();
}

int run_synth(const SynthArgs& a, std::ostream& out) {
  if (a.ell < 1) throw UsageError("--ell must be >= 1");
  const auto field = synthesize(a.ell, a.seed);
  io::save_field(a.out, field);
  out << "coefficients: " << field.coefficients().size() << '\n';
  return kSuccess;
}

// ---- epc -----------------------------------------------------------------

struct EpcArgs {
  std::string field;
  int ell = 0;
  std::optional<std::uint64_t> seed;
  std::string lo = "-inf";
  std::string hi = "inf";
  std::string method = "morse";
  int oversampling = 8;
  std::string out;
};

void add_epc(CLI::App& app, EpcArgs& a) {
  auto* cmd = app.add_subcommand("epc", "Euler characteristic of one excursion set");
  auto* field = cmd->add_option("--field", a.field, "Field JSON written by synth");
  auto* ell = cmd->add_option("--ell", a.ell, "Degree, with --seed");
  auto* seed = cmd->add_option("--seed", a.seed, "Seed, with --ell");
  field->excludes(ell)->excludes(seed);
  cmd->add_option("--lo", a.lo, "Lower endpoint (use --lo=-inf for -inf)");
  cmd->add_option("--hi", a.hi, "Upper endpoint");
  cmd->add_option("--method", a.method, "morse | mesh | both");
  cmd->add_option("--oversampling", a.oversampling, "Mesh oversampling (>= 4)");
  cmd->add_option("--out", a.out, "CSV output path (seed,method,interval_lo,...)");
}

int run_epc(const EpcArgs& a, std::ostream& out) {
  const auto method = [&] {
    try {
      return mc::parse_method(a.method);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  if (a.field.empty() && (a.ell < 1 || !a.seed)) {
    throw UsageError("give --field, or --ell (>= 1) together with --seed");
  }
  if (method != mc::Method::morse && a.oversampling < 4) {
    throw UsageError("--oversampling must be >= 4");
  }
  const auto interval = [&] {
    try {
      return ThresholdInterval::make(parse_number(a.lo, "--lo"), parse_number(a.hi, "--hi"));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();

  const RandomEigenfunction field =
      a.field.empty() ? synthesize(a.ell, *a.seed) : io::load_field(a.field);

  std::vector<EPCResult> results;
  if (method != mc::Method::mesh) {
    const auto points = find_critical_points(field);
    results.push_back(epc_morse(points, interval));
  }
  if (method != mc::Method::morse) {
    const auto mesh = build_triangulation(field.degree(), a.oversampling);
    results.push_back(epc_mesh(mesh, evaluate_on_triangulation(field, mesh), interval));
  }

  std::ostringstream csv;
  write_epc_csv_header(csv);
  for (const auto& r : results) {
    write_epc_csv_row(csv, field.seed(), r);
    out << to_string(r.method) << " chi " << r.chi;
    if (r.method == EPCMethod::morse) {
      out << " mu0 " << r.counts[0] << " mu1 " << r.counts[1] << " mu2 " << r.counts[2];
    }
    if (r.boundary_degenerate) out << " (critical value on an endpoint)";
    out << '\n';
  }
  if (results.size() == 2) {
    out << "agreement " << (results[0].chi == results[1].chi ? "yes" : "no") << '\n';
  }
  if (!a.out.empty()) io::write_text(a.out, csv.str());
  return kSuccess;
}

// ---- ensemble ------------------------------------------------------------

struct EnsembleArgs {
  int ell = 0;
  int n = 0;
  std::uint64_t seed = 1;
  std::string thresholds;
  std::string intervals;
  std::string method = "morse";
  int oversampling = 8;
  std::optional<int> parallel;
  int max_resamples = 16;
  std::string out;
};

void add_ensemble(CLI::App& app, EnsembleArgs& a) {
  auto* cmd = app.add_subcommand("ensemble", "Monte-Carlo ensemble of Euler characteristics");
  cmd->add_option("--ell", a.ell, "Degree (>= 1)")->required();
  cmd->add_option("--n", a.n, "Number of samples (>= 2)")->required();
  cmd->add_option("--seed", a.seed, "Base seed");
  cmd->add_option("--thresholds", a.thresholds,
                  "Half-line thresholds: reals and a:b:step ranges, comma separated");
  cmd->add_option("--intervals", a.intervals, "Intervals lo:hi, comma separated");
  cmd->add_option("--method", a.method, "morse | mesh | both");
  cmd->add_option("--oversampling", a.oversampling, "Mesh oversampling (>= 4)");
  cmd->add_option("--parallel", a.parallel,
                  std::string("Worker threads, 0 = all cores (default from ") + kParallelismEnv +
                      ")");
  cmd->add_option("--max-resamples", a.max_resamples, "Redraw budget per sample");
  cmd->add_option("--out", a.out, "Runs CSV path; the sidecar gets a .json extension")
      ->required();
}

int run_ensemble_cmd(const EnsembleArgs& a, std::ostream& out) {
  mc::EnsembleConfig config;
  try {
    config.ell = a.ell;
    config.n_samples = a.n;
    config.base_seed = a.seed;
    if (!a.thresholds.empty()) {
      for (double u : parse_thresholds(a.thresholds)) {
        config.intervals.push_back(ThresholdInterval::half_line(u));
      }
    }
    if (!a.intervals.empty()) {
      for (const auto& i : parse_intervals(a.intervals)) config.intervals.push_back(i);
    }
    config.method = mc::parse_method(a.method);
    config.oversampling = a.oversampling;
    config.parallelism = a.parallel ? *a.parallel : default_parallelism();
    config.max_resamples = a.max_resamples;
    if (config.max_resamples < 0) throw UsageError("--max-resamples must be >= 0");
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto result = mc::run_ensemble(config);
  mc::save_ensemble(a.out, result);
  std::size_t resamples = 0;
  for (const auto& s : result.samples) resamples += static_cast<std::size_t>(s.resamples);
  out << "samples " << result.samples.size() << " columns " << result.column_ids().size()
      << " resamples " << resamples << '\n';
  return kSuccess;
}

// ---- report --------------------------------------------------------------

struct ReportArgs {
  std::string runs;
  std::string out;
  bool no_pairs = false;
};

void add_report(CLI::App& app, ReportArgs& a) {
  auto* cmd = app.add_subcommand("report", "Compare an ensemble with the analytic predictions");
  cmd->add_option("--runs", a.runs, "Runs CSV written by ensemble")->required();
  cmd->add_option("--out", a.out, "Report CSV path ('-' for stdout)");
  cmd->add_flag("--no-pairs", a.no_pairs, "Skip covariance and correlation rows");
}

int run_report(const ReportArgs& a, std::ostream& out) {
  const auto result = mc::load_ensemble(a.runs);
  const auto pairs = a.no_pairs ? std::vector<std::pair<std::size_t, std::size_t>>{}
                                : mc::same_method_pairs(result);
  const auto estimate = mc::estimate_moments(result, pairs);
  const auto rows = mc::compare_to_theory(estimate, result.config);
  std::ostringstream csv;
  mc::write_report_csv(csv, rows);
  write_output(a.out, csv.str(), out);
  if (!a.out.empty() && a.out != "-") {
    int pass = 0;
    int fail = 0;
    for (const auto& r : rows) {
      pass += r.status == "pass";
      fail += r.status == "fail";
    }
    out << "rows " << rows.size() << " pass " << pass << " fail " << fail << '\n';
  }
  return kSuccess;
}

// ---- verify-analytic -----------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 20240607;
  int cases = 64;
  std::string out;
};

void add_verify(CLI::App& app, VerifyArgs& a) {
  auto* cmd = app.add_subcommand("verify-analytic", "Run the analytic identity suite");
  cmd->add_option("--seed", a.seed, "Seed for the randomized cases");
  cmd->add_option("--cases", a.cases, "Number of randomized cases (>= 1)");
  cmd->add_option("--out", a.out, "CSV path (check_name,max_abs_error,tolerance,status)");
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.cases < 1) throw UsageError("--cases must be >= 1");
  const auto checks = analytic::run_identity_suite(a.seed, a.cases);
  std::ostringstream csv;
  analytic::write_identity_csv(csv, checks);
  if (!a.out.empty()) io::write_text(a.out, csv.str());
  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " error " << format_real(c.max_error)
        << " tolerance " << format_real(c.tolerance) << '\n';
    all = all && c.passed;
  }
  return all ? kSuccess : kRuntimeFailure;
}

// ---- surface -------------------------------------------------------------

struct SurfaceArgs {
  std::string which;
  std::string range = "-4:4";
  double step = 0.1;
  std::string out;
};

void add_surface(CLI::App& app, SurfaceArgs& a) {
  auto* cmd = app.add_subcommand("surface", "Gridded leading-order covariance surfaces");
  cmd->add_option("--which", a.which, "cov-kernel | halfline-cov | halfline-var")
      ->required()
      ->check(CLI::IsMember({"cov-kernel", "halfline-cov", "halfline-var"}));
  cmd->add_option("--range", a.range, "a:b (use --range=-4:4 for a negative start)");
  cmd->add_option("--step", a.step, "Grid step (> 0)");
  cmd->add_option("--out", a.out, "CSV path ('-' or omitted for stdout)");
}

int run_surface(const SurfaceArgs& a, std::ostream& out) {
  if (!(a.step > 0.0) || !std::isfinite(a.step)) throw UsageError("--step must be > 0");
  const auto parts = split(a.range, ':');
  if (parts.size() != 2) throw UsageError("--range must look like a:b");
  double lo = 0.0;
  double hi = 0.0;
  try {
    lo = parse_number(parts[0], "--range");
    hi = parse_number(parts[1], "--range");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw UsageError("--range needs finite a <= b");
  }
  const auto count = static_cast<long>(std::floor((hi - lo) / a.step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("--range/--step give too many nodes");
  std::vector<double> grid;
  for (long k = 0; k < count; ++k) grid.push_back(snap(lo + static_cast<double>(k) * a.step));

  std::ostringstream csv;
  const double scale = 1.0 / (8.0 * std::numbers::pi);
  if (a.which == "halfline-var") {
    csv << "u,z\n";
    for (double u : grid) {
      csv << format_real(u) << ',' << format_real(analytic::leading_variance_halfline(1, u)) << '\n';
    }
  } else {
    csv << (a.which == "cov-kernel" ? "t1,t2,z\n" : "u1,u2,z\n");
    for (double x : grid) {
      for (double y : grid) {
        const double z =
            a.which == "cov-kernel"
                ? scale * analytic::p_kernel(x) * analytic::p_kernel(y)
                : analytic::leading_covariance(1, ThresholdInterval::half_line(x),
                                               ThresholdInterval::half_line(y));
        csv << format_real(x) << ',' << format_real(y) << ',' << format_real(z) << '\n';
      }
    }
  }
  write_output(a.out, csv.str(), out);
  return kSuccess;
}

}  // namespace

std::vector<double> parse_thresholds(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      const double u = parse_number(item, "threshold");
      if (!std::isfinite(u)) throw std::invalid_argument("threshold must be finite");
      out.push_back(u);
    } else if (parts.size() == 3) {
      const double a = parse_number(parts[0], "range start");
      const double b = parse_number(parts[1], "range end");
      const double step = parse_number(parts[2], "range step");
      if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw std::invalid_argument("range '" + item + "' needs finite a <= b");
      }
      if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("range '" + item + "' needs a positive step");
      }
      const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
      if (count > 10000) throw std::invalid_argument("range '" + item + "' is too long");
      for (long k = 0; k < count; ++k) out.push_back(snap(a + static_cast<double>(k) * step));
    } else {
      throw std::invalid_argument("threshold item '" + item + "' is neither u nor a:b:step");
    }
  }
  return out;
}

std::vector<ThresholdInterval> parse_intervals(const std::string& text) {
  std::vector<ThresholdInterval> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw std::invalid_argument("interval '" + item + "' is not lo:hi");
    const double lo = parse_number(parts[0], "interval");
    const double hi = parse_number(parts[1], "interval");
    try {
      out.push_back(ThresholdInterval::make(lo, hi));
    } catch (const DomainError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random spherical eigenfunctions and the Euler characteristic of their "
               "excursion sets",
               "sphtopo"};
  app.set_version_flag("--version", io::library_version());
  app.require_subcommand(1);

  SynthArgs synth;
  EpcArgs epc;
  EnsembleArgs ensemble;
  ReportArgs report;
  VerifyArgs verify;
  SurfaceArgs surface;
  add_synth(app, synth);
  add_epc(app, epc);
  add_ensemble(app, ensemble);
  add_report(app, report);
  add_verify(app, verify);
  add_surface(app, surface);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << io::library_version() << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    if (name == "synth") return run_synth(synth, out);
    if (name == "epc") return run_epc(epc, out);
    if (name == "ensemble") return run_ensemble_cmd(ensemble, out);
    if (name == "report") return run_report(report, out);
    if (name == "verify-analytic") return run_verify(verify, out);
    if (name == "surface") return run_surface(surface, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NonMorseError& e) {
    err << "error: seed " << e.seed() << ": " << e.what() << '\n';
    return kRuntimeFailure;
  } catch (const CompletenessError& e) {
    err << "error: seed " << e.seed() << ": " << e.what() << '\n';
    return kRuntimeFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  err << "error: unknown subcommand " << name << '\n';
  return kUsageError;
}

}  // namespace sphtopo::cli

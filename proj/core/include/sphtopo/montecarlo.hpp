#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sphtopo/interval.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo::mc {

enum class Method { morse, mesh, both };

const char* to_string(Method method);
/// Throws DomainError for anything but "morse", "mesh", "both".
Method parse_method(const std::string& text);

struct EnsembleConfig {
  int ell = 20;
  int n_samples = 100;
  std::uint64_t base_seed = 1;
  std::vector<ThresholdInterval> intervals;
  Method method = Method::morse;
  int oversampling = 8;
  int parallelism = 0;  // 0: hardware concurrency
  int max_resamples = 16;
  SearchConfig search;

  /// Throws DomainError on ell < 1, n_samples < 2, no intervals,
  /// oversampling < 4 (mesh methods) or negative parallelism.
  void validate() const;
};

/// Why a sample was redrawn, or a note about it.
struct AuditEntry {
  std::size_t sample_index = 0;
  std::string kind;  // "non-morse", "endpoint-degenerate", "method-disagreement"
  std::uint64_t seed = 0;
  std::string detail;
};

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;       // seed of the realization finally used
  int resamples = 0;
  std::vector<int> chi_morse;   // one per interval (empty if not computed)
  std::vector<int> chi_mesh;
  std::array<int, 3> critical_counts{};  // whole-sphere maxima, saddles, minima
};

struct EnsembleResult {
  EnsembleConfig config;
  std::vector<SampleRecord> samples;  // sorted by index
  std::vector<AuditEntry> audit;      // sorted by sample index

  /// Column ids in CSV order, e.g. "morse[1:inf]".
  std::vector<std::string> column_ids() const;
  /// Chi values by column (CSV order), as doubles.
  std::vector<std::vector<double>> columns() const;
};

/// Runs the ensemble. Sample i starts from seed derive_seed(base_seed, i);
/// non-Morse and endpoint-degenerate realizations are redrawn from a derived
/// seed and logged. The result does not depend on `parallelism`.
///
/// CompletenessError propagates with the offending seed.
EnsembleResult run_ensemble(const EnsembleConfig& config);

/// Runs CSV: header `seed_index,<column ids>` and one row per sample.
void write_runs_csv(std::ostream& out, const EnsembleResult& result);
/// JSON sidecar: library version, config, per-sample seeds and the audit.
std::string sidecar_json(const EnsembleResult& result);

/// Writes `<path>` (CSV) and `<path with .json extension>` (sidecar).
void save_ensemble(const std::filesystem::path& csv_path, const EnsembleResult& result);
/// Reads back what save_ensemble wrote. Throws IoError.
EnsembleResult load_ensemble(const std::filesystem::path& csv_path);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

struct ColumnMoments {
  std::string id;
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;     // unbiased
  double se_mean = 0.0;      // s / sqrt(n)
  double se_variance = 0.0;  // leave-one-out jackknife
  bool degenerate = false;   // constant column
};

struct PairMoments {
  std::size_t first = 0;
  std::size_t second = 0;
  double covariance = 0.0;
  double correlation = 0.0;
  double se_covariance = 0.0;
  double se_correlation = 0.0;
  bool degenerate = false;   // one of the columns is constant
};

struct MomentEstimate {
  std::size_t n = 0;
  std::vector<ColumnMoments> columns;
  std::vector<PairMoments> pairs;
};

/// Moments of raw columns. Throws DomainError if n < 2, columns differ in
/// length, or a pair index is out of range.
MomentEstimate estimate_moments(const std::vector<std::vector<double>>& columns,
                                const std::vector<std::string>& ids,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Moments of an ensemble's columns (CSV order).
MomentEstimate estimate_moments(const EnsembleResult& result,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// All pairs (i < j) of columns that use the same method.
std::vector<std::pair<std::size_t, std::size_t>> same_method_pairs(const EnsembleResult& result);

struct ReportRow {
  std::string quantity;  // mean, variance, covariance, correlation, cv
  std::string label;     // interval id, or "id1|id2" for pairs
  double empirical = 0.0;
  double theory = 0.0;
  double stderr_or_ratio = 0.0;
  std::string z_or_band;
  std::string status;
};

/// Theory vs. experiment:
///  - mean: exact expectation; z = (empirical - theory) / se; pass iff |z| <= 3
///  - variance / covariance: leading order; ratio = empirical / theory, band
///    [0.7, 1.3]; tagged subleading-dominated when the leading term vanishes
///  - correlation: predicted sign of weight(I1) * weight(I2)
///  - cv: stdev / mean against sqrt(leading variance) / expectation
/// Column ids must be of the form "<method>[lo:hi]".
std::vector<ReportRow> compare_to_theory(const MomentEstimate& estimate,
                                         const EnsembleConfig& config);

/// Header `quantity,u_or_pair,empirical,theory,stderr_or_ratio,z_or_band,status`.
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace sphtopo::mc

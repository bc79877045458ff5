#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>

#include "sphtopo/errors.hpp"
#include "sphtopo/harmonics.hpp"
#include "sphtopo/montecarlo.hpp"
#include "sphtopo/rng.hpp"

namespace sphtopo::mc {

const char* to_string(Method method) {
  switch (method) {
    case Method::morse: return "morse";
    case Method::mesh: return "mesh";
    case Method::both: return "both";
  }
  return "morse";
}

Method parse_method(const std::string& text) {
  if (text == "morse") return Method::morse;
  if (text == "mesh") return Method::mesh;
  if (text == "both") return Method::both;
  throw DomainError("unknown method '" + text + "' (expected morse, mesh or both)");
}

void EnsembleConfig::validate() const {
  if (ell < 1) throw DomainError("ensemble: ell must be >= 1");
  if (n_samples < 2) throw DomainError("ensemble: n_samples must be >= 2");
  if (intervals.empty()) throw DomainError("ensemble: at least one threshold is required");
  if (method != Method::morse && oversampling < 4) {
    throw DomainError("ensemble: oversampling must be >= 4");
  }
  if (parallelism < 0) throw DomainError("ensemble: parallelism must be >= 0");
  if (max_resamples < 0) throw DomainError("ensemble: max_resamples must be >= 0");
}

std::vector<std::string> EnsembleResult::column_ids() const {
  std::vector<std::string> ids;
  auto add = [&](const char* method) {
    for (const auto& i : config.intervals) ids.push_back(std::string(method) + "[" + i.label() + "]");
  };
  if (config.method != Method::mesh) add("morse");
  if (config.method != Method::morse) add("mesh");
  return ids;
}

std::vector<std::vector<double>> EnsembleResult::columns() const {
  const std::size_t k = config.intervals.size();
  std::vector<std::vector<double>> cols;
  auto add = [&](auto member) {
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<double> col;
      col.reserve(samples.size());
      for (const auto& s : samples) col.push_back((s.*member)[c]);
      cols.push_back(std::move(col));
    }
  };
  if (config.method != Method::mesh) add(&SampleRecord::chi_morse);
  if (config.method != Method::morse) add(&SampleRecord::chi_mesh);
  return cols;
}

namespace {

struct SampleOutcome {
  SampleRecord record;
  std::vector<AuditEntry> audit;
};

SampleOutcome run_sample(const EnsembleConfig& config, const Triangulation* mesh,
                         std::size_t index) {
  SampleOutcome out;
  out.record.index = index;
  std::uint64_t seed = rng::derive_seed(config.base_seed, index);
  const bool morse = config.method != Method::mesh;
  const bool meshy = config.method != Method::morse;

  for (int attempt = 0;; ++attempt) {
    if (attempt > config.max_resamples) {
      throw std::runtime_error("sample " + std::to_string(index) + ": exceeded " +
                               std::to_string(config.max_resamples) + " resamples");
    }
    if (attempt > 0) seed = rng::combine(seed, static_cast<std::uint64_t>(attempt));
    const RandomEigenfunction field = synthesize(config.ell, seed);
    SampleRecord& rec = out.record;
    rec.seed = seed;
    rec.resamples = attempt;
    rec.chi_morse.clear();
    rec.chi_mesh.clear();

    if (morse) {
      std::optional<CriticalPointSet> points;
      try {
        points = find_critical_points(field, config.search);
      } catch (const NonMorseError& e) {
        out.audit.push_back({index, "non-morse", seed, e.what()});
        continue;
      }
      rec.critical_counts = points->counts();
      bool degenerate = false;
      for (const auto& interval : config.intervals) {
        const EPCResult r = epc_morse(*points, interval);
        if (r.boundary_degenerate) {
          out.audit.push_back({index, "endpoint-degenerate", seed,
                               "critical value on an endpoint of " + interval.label()});
          degenerate = true;
          break;
        }
        rec.chi_morse.push_back(r.chi);
      }
      if (degenerate) continue;
    }
    if (meshy) {
      const GridSamples values = evaluate_on_triangulation(field, *mesh);
      for (const auto& interval : config.intervals) {
        rec.chi_mesh.push_back(epc_mesh(*mesh, values, interval).chi);
      }
    }
    if (morse && meshy) {
      for (std::size_t k = 0; k < config.intervals.size(); ++k) {
        if (rec.chi_morse[k] != rec.chi_mesh[k]) {
          out.audit.push_back({index, "method-disagreement", seed,
                               config.intervals[k].label() + ": morse " +
                                   std::to_string(rec.chi_morse[k]) + ", mesh " +
                                   std::to_string(rec.chi_mesh[k])});
        }
      }
    }
    return out;
  }
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleConfig& config) {
  config.validate();
  std::optional<Triangulation> mesh;
  if (config.method != Method::morse) mesh = build_triangulation(config.ell, config.oversampling);

  const auto n = static_cast<std::size_t>(config.n_samples);
  std::vector<std::optional<SampleOutcome>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = run_sample(config, mesh ? &*mesh : nullptr, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = config.parallelism > 0 ? static_cast<unsigned>(config.parallelism)
                                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  EnsembleResult result;
  result.config = config;
  result.samples.reserve(n);
  for (auto& s : slots) {
    result.samples.push_back(std::move(s->record));
    result.audit.insert(result.audit.end(), s->audit.begin(), s->audit.end());
  }
  return result;
}

}  // namespace sphtopo::mc

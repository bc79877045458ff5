#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"
#include "sphtopo/io.hpp"
#include "sphtopo/montecarlo.hpp"

namespace sphtopo::mc {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_runs_csv(std::ostream& out, const EnsembleResult& result) {
  out << "seed_index";
  for (const auto& id : result.column_ids()) out << ',' << id;
  out << '\n';
  const bool morse = result.config.method != Method::mesh;
  const bool mesh = result.config.method != Method::morse;
  for (const auto& s : result.samples) {
    out << s.index;
    if (morse) {
      for (int chi : s.chi_morse) out << ',' << chi;
    }
    if (mesh) {
      for (int chi : s.chi_mesh) out << ',' << chi;
    }
    out << '\n';
  }
}

std::string sidecar_json(const EnsembleResult& result) {
  const auto& c = result.config;
  nlohmann::ordered_json j;
  j["library_version"] = io::library_version();
  nlohmann::ordered_json cfg;
  cfg["ell"] = c.ell;
  cfg["n_samples"] = c.n_samples;
  cfg["base_seed"] = c.base_seed;
  std::vector<std::string> intervals;
  for (const auto& i : c.intervals) intervals.push_back(i.label());
  cfg["intervals"] = intervals;
  cfg["method"] = to_string(c.method);
  cfg["oversampling"] = c.oversampling;
  cfg["max_resamples"] = c.max_resamples;
  cfg["search"] = {{"lattice_factor", c.search.lattice_factor},
                   {"refined_lattice_factor", c.search.refined_lattice_factor},
                   {"dedup_radius", c.search.dedup_radius},
                   {"max_iterations", c.search.max_iterations},
                   {"tol_grad", c.search.tol_grad},
                   {"degeneracy_floor", c.search.degeneracy_floor},
                   {"seed_reach", c.search.seed_reach}};
  j["config"] = cfg;
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : result.samples) {
    samples.push_back({{"seed_index", s.index},
                       {"seed", s.seed},
                       {"resamples", s.resamples},
                       {"critical_counts", s.critical_counts}});
  }
  j["samples"] = samples;
  auto audit = nlohmann::ordered_json::array();
  for (const auto& a : result.audit) {
    audit.push_back({{"sample_index", a.sample_index},
                     {"kind", a.kind},
                     {"seed", a.seed},
                     {"detail", a.detail}});
  }
  j["audit"] = audit;
  return j.dump(2) + "\n";
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p.replace_extension(".json");
  return p;
}

void save_ensemble(const std::filesystem::path& csv_path, const EnsembleResult& result) {
  std::ostringstream csv;
  write_runs_csv(csv, result);
  io::write_text(csv_path, csv.str());
  io::write_text(sidecar_path(csv_path), sidecar_json(result));
}

EnsembleResult load_ensemble(const std::filesystem::path& csv_path) {
  EnsembleResult result;
  try {
    const auto j = nlohmann::json::parse(io::read_text(sidecar_path(csv_path)));
    const auto& cfg = j.at("config");
    auto& c = result.config;
    c.ell = cfg.at("ell").get<int>();
    c.n_samples = cfg.at("n_samples").get<int>();
    c.base_seed = cfg.at("base_seed").get<std::uint64_t>();
    for (const auto& s : cfg.at("intervals")) {
      c.intervals.push_back(ThresholdInterval::parse(s.get<std::string>()));
    }
    c.method = parse_method(cfg.at("method").get<std::string>());
    c.oversampling = cfg.value("oversampling", 8);
    c.max_resamples = cfg.value("max_resamples", 16);
    if (cfg.contains("search")) {
      const auto& s = cfg["search"];
      c.search.lattice_factor = s.value("lattice_factor", c.search.lattice_factor);
      c.search.refined_lattice_factor =
          s.value("refined_lattice_factor", c.search.refined_lattice_factor);
      c.search.dedup_radius = s.value("dedup_radius", c.search.dedup_radius);
      c.search.max_iterations = s.value("max_iterations", c.search.max_iterations);
      c.search.tol_grad = s.value("tol_grad", c.search.tol_grad);
      c.search.degeneracy_floor = s.value("degeneracy_floor", c.search.degeneracy_floor);
      c.search.seed_reach = s.value("seed_reach", c.search.seed_reach);
    }
    for (const auto& a : j.value("audit", nlohmann::json::array())) {
      result.audit.push_back({a.at("sample_index").get<std::size_t>(),
                              a.at("kind").get<std::string>(), a.at("seed").get<std::uint64_t>(),
                              a.value("detail", std::string())});
    }
    const auto samples = j.value("samples", nlohmann::json::array());
    std::istringstream csv(io::read_text(csv_path));
    std::string line;
    if (!std::getline(csv, line)) throw IoError("runs CSV: empty file");
    const auto header = split(line, ',');
    const auto expected = result.column_ids();
    if (header.size() != expected.size() + 1 || header[0] != "seed_index" ||
        !std::equal(expected.begin(), expected.end(), header.begin() + 1)) {
      throw IoError("runs CSV header does not match its sidecar configuration");
    }
    const std::size_t k = c.intervals.size();
    const bool morse = c.method != Method::mesh;
    const bool mesh = c.method != Method::morse;
    while (std::getline(csv, line)) {
      if (line.empty() || line == "\r") continue;
      const auto cells = split(line, ',');
      if (cells.size() != header.size()) throw IoError("runs CSV: ragged row '" + line + "'");
      SampleRecord s;
      s.index = std::stoull(cells[0]);
      std::size_t pos = 1;
      if (morse) {
        for (std::size_t q = 0; q < k; ++q) s.chi_morse.push_back(std::stoi(cells[pos++]));
      }
      if (mesh) {
        for (std::size_t q = 0; q < k; ++q) s.chi_mesh.push_back(std::stoi(cells[pos++]));
      }
      for (const auto& meta : samples) {
        if (meta.at("seed_index").get<std::size_t>() == s.index) {
          s.seed = meta.at("seed").get<std::uint64_t>();
          s.resamples = meta.value("resamples", 0);
          s.critical_counts = meta.value("critical_counts", std::array<int, 3>{});
          break;
        }
      }
      result.samples.push_back(std::move(s));
    }
    c.n_samples = static_cast<int>(result.samples.size());
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("ensemble sidecar: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("runs CSV: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw IoError(std::string("runs CSV: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("ensemble: ") + e.what());
  }
  return result;
}

}  // namespace sphtopo::mc

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>

#include "sphtopo/errors.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo {

namespace {

// Jet together with the ambient vectors of the frame it is expressed in.
struct FrameJet {
  Jet2 jet;
  Vec3 e1;
  Vec3 e2;
};

class JetOracle {
 public:
  explicit JetOracle(const RandomEigenfunction& field)
      : field_(field),
        north_(Rotation::equator_to_north_pole()),
        south_(Rotation::equator_to_south_pole()) {}

  FrameJet at(const Vec3& x) const {
    const SpherePoint p = SpherePoint::from_cartesian(x);
    if (!in_pole_cap(field_.degree(), p)) {
      return {evaluate_jet(field_, p), p.e_theta(), p.e_phi()};
    }
    const Rotation& r = p.theta() < 0.5 * std::numbers::pi ? north_ : south_;
    const SpherePoint q = SpherePoint::from_cartesian(r.inverse().apply(x));
    return {evaluate_jet_rotated(field_, q, r), r.apply(q.e_theta()), r.apply(q.e_phi())};
  }

 private:
  const RandomEigenfunction& field_;
  Rotation north_;
  Rotation south_;
};

std::array<double, 2> eigenvalues(const Eigen::Matrix2d& h) {
  const double mean = 0.5 * (h(0, 0) + h(1, 1));
  const double half_diff = 0.5 * (h(0, 0) - h(1, 1));
  const double radius = std::hypot(half_diff, h(0, 1));
  return {mean - radius, mean + radius};
}

// Newton step -H^{-1} g in frame coordinates; empty if H is singular.
bool newton_step(const Jet2& jet, Eigen::Vector2d& step) {
  const Eigen::Matrix2d& h = jet.hessian;
  const double det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
  const double scale = h.cwiseAbs().maxCoeff();
  if (!(std::abs(det) > 1e-300) || std::abs(det) < 1e-14 * scale * scale) return false;
  step << -(h(1, 1) * jet.gradient(0) - h(0, 1) * jet.gradient(1)) / det,
          -(-h(1, 0) * jet.gradient(0) + h(0, 0) * jet.gradient(1)) / det;
  return true;
}

// Uniform cubic bucketing of found points for radius queries.
class PointIndex {
 public:
  explicit PointIndex(double cell) : cell_(cell) {}

  bool has_neighbour(const Vec3& x, double radius) const {
    const auto c = cell_of(x);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const auto it = buckets_.find(key(c[0] + dx, c[1] + dy, c[2] + dz));
          if (it == buckets_.end()) continue;
          for (const Vec3& y : it->second) {
            if (geodesic_distance(x, y) < radius) return true;
          }
        }
      }
    }
    return false;
  }

  void insert(const Vec3& x) {
    const auto c = cell_of(x);
    buckets_[key(c[0], c[1], c[2])].push_back(x);
  }

 private:
  std::array<std::int64_t, 3> cell_of(const Vec3& x) const {
    return {static_cast<std::int64_t>(std::floor(x.x() / cell_)),
            static_cast<std::int64_t>(std::floor(x.y() / cell_)),
            static_cast<std::int64_t>(std::floor(x.z() / cell_))};
  }
  static std::uint64_t key(std::int64_t i, std::int64_t j, std::int64_t k) {
    const auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v + (1 << 20)) & 0x1fffff; };
    return (u(i) << 42) | (u(j) << 21) | u(k);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<Vec3>> buckets_;
};

struct Seed {
  double reach;  // predicted Newton step length
  Vec3 start;    // predicted location
};

class Search {
 public:
  Search(const RandomEigenfunction& field, const SearchConfig& config)
      : field_(field),
        config_(config),
        oracle_(field),
        ell_(static_cast<double>(field.degree())),
        tol_(config.tol_grad * ell_ * ell_),
        dedup_(config.dedup_radius / ell_),
        index_(std::max(config.dedup_radius / ell_, 1e-6)) {}

  CriticalPointSet run(int lattice_factor) {
    CriticalPointSet out;
    out.lattice_factor = lattice_factor;
    std::vector<Seed> seeds = lattice_seeds(lattice_factor);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.reach < b.reach; });
    for (const Vec3& s : cap_seeds()) seeds.push_back({0.0, s});

    for (const Seed& seed : seeds) {
      if (index_.has_neighbour(seed.start, dedup_)) continue;
      ++out.newton_starts;
      auto found = newton(seed.start);
      if (!found) continue;
      const Vec3 x = found->location.cartesian();
      if (index_.has_neighbour(x, dedup_)) continue;
      index_.insert(x);
      out.points.push_back(*found);
    }
    return out;
  }

 private:
  std::vector<Seed> lattice_seeds(int factor) const {
    const double eps = pole_cap_radius(field_.degree());
    const double spacing = std::numbers::pi / (factor * ell_);
    const int bands = static_cast<int>(std::ceil((std::numbers::pi - 2.0 * eps) / spacing));
    const double dtheta = (std::numbers::pi - 2.0 * eps) / bands;
    const int longitudes = 2 * factor * field_.degree();
    LatLonGrid grid;
    grid.thetas.resize(static_cast<std::size_t>(bands));
    for (int i = 0; i < bands; ++i) grid.thetas[i] = eps + (i + 0.5) * dtheta;
    grid.phis.resize(static_cast<std::size_t>(longitudes));
    for (int j = 0; j < longitudes; ++j) grid.phis[j] = 2.0 * std::numbers::pi * j / longitudes;

    const GridSamples samples = evaluate_grid_jets(field_, grid);
    const double reach = config_.seed_reach * spacing;
    std::vector<Seed> seeds;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      Eigen::Vector2d step;
      if (!newton_step(samples.jets[k], step)) continue;
      const double len = step.norm();
      if (len > reach) continue;
      const SpherePoint p = grid.node(k);
      const Vec3 v = step(0) * p.e_theta() + step(1) * p.e_phi();
      seeds.push_back({len, exponential_map(p.cartesian(), v)});
    }
    return seeds;
  }

  std::vector<Vec3> cap_seeds() const {
    const double eps = pole_cap_radius(field_.degree());
    std::vector<Vec3> out;
    for (double z : {1.0, -1.0}) {
      const Vec3 pole(0.0, 0.0, z);
      out.push_back(pole);
      for (double r : {0.5 * eps, eps}) {
        for (int k = 0; k < 6; ++k) {
          const double a = 2.0 * std::numbers::pi * k / 6.0;
          out.push_back(exponential_map(pole, r * Vec3(std::cos(a), std::sin(a), 0.0)));
        }
      }
    }
    return out;
  }

  std::optional<CriticalPoint> newton(Vec3 x) const {
    const double max_step = 1.0 / ell_;
    FrameJet fj = oracle_.at(x);
    double residual = fj.jet.gradient.norm();
    for (int it = 0; it < config_.max_iterations && residual > tol_; ++it) {
      Eigen::Vector2d step;
      if (!newton_step(fj.jet, step)) return std::nullopt;
      if (step.norm() > max_step) step *= max_step / step.norm();
      bool accepted = false;
      double scale = 1.0;
      for (int tries = 0; tries < 8; ++tries) {
        const Vec3 v = scale * (step(0) * fj.e1 + step(1) * fj.e2);
        const Vec3 y = exponential_map(x, v);
        FrameJet trial = oracle_.at(y);
        const double r = trial.jet.gradient.norm();
        if (r < residual) {
          x = y;
          fj = trial;
          residual = r;
          accepted = true;
          break;
        }
        scale *= 0.5;
      }
      if (!accepted) break;
    }
    if (!(residual <= tol_)) return std::nullopt;

    const auto eig = eigenvalues(fj.jet.hessian);
    const double floor = config_.degeneracy_floor * ell_ * ell_;
    if (std::min(std::abs(eig[0]), std::abs(eig[1])) < floor) {
      throw NonMorseError(field_.seed(), "degenerate critical point (Hessian eigenvalue below " +
                                             std::to_string(floor) + ")");
    }
    CriticalPoint cp{SpherePoint::from_cartesian(x), fj.jet.value, 0, eig, residual};
    cp.index = (eig[0] > 0.0 ? 1 : 0) + (eig[1] > 0.0 ? 1 : 0);
    return cp;
  }

  const RandomEigenfunction& field_;
  SearchConfig config_;
  JetOracle oracle_;
  double ell_;
  double tol_;
  double dedup_;
  PointIndex index_;
};

int alternating_sum(const CriticalPointSet& set) {
  const auto c = set.counts();
  return c[0] - c[1] + c[2];
}

}  // namespace

std::array<int, 3> CriticalPointSet::counts() const {
  std::array<int, 3> c{};
  for (const auto& p : points) ++c[static_cast<std::size_t>(p.index)];
  return c;
}

CriticalPointSet search_critical_points(const RandomEigenfunction& field, int lattice_factor,
                                        const SearchConfig& config) {
  if (lattice_factor < 1) throw DomainError("search_critical_points: lattice factor must be >= 1");
  return Search(field, config).run(lattice_factor);
}

CriticalPointSet find_critical_points(const RandomEigenfunction& field,
                                      const SearchConfig& config) {
  CriticalPointSet result = Search(field, config).run(config.lattice_factor);
  if (alternating_sum(result) == 2) return result;
  if (config.refined_lattice_factor > config.lattice_factor) {
    result = Search(field, config).run(config.refined_lattice_factor);
    if (alternating_sum(result) == 2) return result;
  }
  const auto c = result.counts();
  throw CompletenessError(field.seed(),
                          "critical point search incomplete for seed " +
                              std::to_string(field.seed()) + ": maxima " + std::to_string(c[0]) +
                              ", saddles " + std::to_string(c[1]) + ", minima " +
                              std::to_string(c[2]));
}

}  // namespace sphtopo

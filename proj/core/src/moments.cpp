#include <algorithm>
#include <cmath>
#include <limits>

#include "sphtopo/errors.hpp"
#include "sphtopo/montecarlo.hpp"

namespace sphtopo::mc {

namespace {

struct Centered {
  double mean = 0.0;
  double ss = 0.0;  // sum of squared deviations
  std::vector<double> dev;
};

Centered center(const std::vector<double>& x) {
  Centered c;
  double sum = 0.0;
  for (double v : x) sum += v;
  c.mean = sum / static_cast<double>(x.size());
  c.dev.reserve(x.size());
  for (double v : x) {
    const double d = v - c.mean;
    c.dev.push_back(d);
    c.ss += d * d;
  }
  return c;
}

double jackknife_se(const std::vector<double>& replicates) {
  const auto n = static_cast<double>(replicates.size());
  double mean = 0.0;
  for (double r : replicates) mean += r;
  mean /= n;
  double acc = 0.0;
  for (double r : replicates) acc += (r - mean) * (r - mean);
  return std::sqrt((n - 1.0) / n * acc);
}

}  // namespace

MomentEstimate estimate_moments(const std::vector<std::vector<double>>& columns,
                                const std::vector<std::string>& ids,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (columns.empty()) throw DomainError("estimate_moments: no columns");
  if (ids.size() != columns.size()) throw DomainError("estimate_moments: id count mismatch");
  const std::size_t n = columns.front().size();
  if (n < 2) throw DomainError("estimate_moments: need at least two samples");
  for (const auto& c : columns) {
    if (c.size() != n) throw DomainError("estimate_moments: columns differ in length");
  }
  for (const auto& [a, b] : pairs) {
    if (a >= columns.size() || b >= columns.size()) {
      throw DomainError("estimate_moments: pair index out of range");
    }
  }

  const double nd = static_cast<double>(n);
  const double inf = std::numeric_limits<double>::infinity();
  MomentEstimate est;
  est.n = n;
  std::vector<Centered> centered;
  centered.reserve(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    centered.push_back(center(columns[k]));
    const auto& c = centered.back();
    ColumnMoments m;
    m.id = ids[k];
    m.n = n;
    m.mean = c.mean;
    m.variance = c.ss / (nd - 1.0);
    m.se_mean = std::sqrt(m.variance / nd);
    m.degenerate = c.ss == 0.0;
    if (n < 3) {
      m.se_variance = inf;
    } else {
      // Leave-one-out: SS_(i) = SS - d_i^2 n / (n - 1).
      std::vector<double> rep(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double d = c.dev[i];
        rep[i] = std::max(0.0, c.ss - d * d * nd / (nd - 1.0)) / (nd - 2.0);
      }
      m.se_variance = jackknife_se(rep);
    }
    est.columns.push_back(std::move(m));
  }

  for (const auto& [a, b] : pairs) {
    const auto& x = centered[a];
    const auto& y = centered[b];
    PairMoments p;
    p.first = a;
    p.second = b;
    double cxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) cxy += x.dev[i] * y.dev[i];
    p.covariance = cxy / (nd - 1.0);
    p.degenerate = x.ss == 0.0 || y.ss == 0.0;
    p.correlation = p.degenerate ? 0.0 : std::clamp(cxy / std::sqrt(x.ss * y.ss), -1.0, 1.0);
    if (n < 3) {
      p.se_covariance = inf;
      p.se_correlation = inf;
    } else {
      std::vector<double> rep_cov(n);
      std::vector<double> rep_corr(n);
      const double shrink = nd / (nd - 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double dx = x.dev[i];
        const double dy = y.dev[i];
        const double c = cxy - dx * dy * shrink;
        const double sx = std::max(0.0, x.ss - dx * dx * shrink);
        const double sy = std::max(0.0, y.ss - dy * dy * shrink);
        rep_cov[i] = c / (nd - 2.0);
        rep_corr[i] = (sx > 0.0 && sy > 0.0) ? std::clamp(c / std::sqrt(sx * sy), -1.0, 1.0) : 0.0;
      }
      p.se_covariance = jackknife_se(rep_cov);
      p.se_correlation = p.degenerate ? 0.0 : jackknife_se(rep_corr);
    }
    est.pairs.push_back(p);
  }
  return est;
}

MomentEstimate estimate_moments(const EnsembleResult& result,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return estimate_moments(result.columns(), result.column_ids(), pairs);
}

std::vector<std::pair<std::size_t, std::size_t>> same_method_pairs(const EnsembleResult& result) {
  const auto ids = result.column_ids();
  const auto method_of = [](const std::string& id) { return id.substr(0, id.find('[')); };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (method_of(ids[i]) == method_of(ids[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace sphtopo::mc

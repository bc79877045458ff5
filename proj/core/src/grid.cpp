#include "sphtopo/grid.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"

namespace sphtopo {

namespace {

// cos(m phi_j), sin(m phi_j) for m = 0..ell, row j contiguous in m.
struct TrigTable {
  std::size_t stride;
  std::vector<double> cos_m;
  std::vector<double> sin_m;

  TrigTable(const std::vector<double>& phis, int ell)
      : stride(static_cast<std::size_t>(ell) + 1),
        cos_m(phis.size() * stride),
        sin_m(phis.size() * stride) {
    for (std::size_t j = 0; j < phis.size(); ++j) {
      const double c1 = std::cos(phis[j]), s1 = std::sin(phis[j]);
      double c = 1.0, s = 0.0;
      double* cr = cos_m.data() + j * stride;
      double* sr = sin_m.data() + j * stride;
      for (std::size_t m = 0; m < stride; ++m) {
        cr[m] = c;
        sr[m] = s;
        const double cn = c * c1 - s * s1;
        s = s * c1 + c * s1;
        c = cn;
      }
    }
  }
};

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

}  // namespace

LatLonGrid LatLonGrid::regular(int bands, int longitudes) {
  if (bands < 1 || longitudes < 1) throw DomainError("LatLonGrid: empty grid");
  LatLonGrid g;
  g.thetas.resize(static_cast<std::size_t>(bands));
  g.phis.resize(static_cast<std::size_t>(longitudes));
  for (int i = 0; i < bands; ++i) g.thetas[i] = (i + 0.5) * std::numbers::pi / bands;
  for (int j = 0; j < longitudes; ++j) g.phis[j] = 2.0 * std::numbers::pi * j / longitudes;
  return g;
}

SpherePoint LatLonGrid::node(std::size_t index) const {
  return SpherePoint::make(thetas[index / phis.size()], phis[index % phis.size()]);
}

std::size_t node_count(const GridGeometry& geometry) {
  return std::visit([](const auto& g) { return g.size(); }, geometry);
}

SpherePoint node_at(const GridGeometry& geometry, std::size_t index) {
  if (const auto* g = std::get_if<LatLonGrid>(&geometry)) return g->node(index);
  return std::get<PointList>(geometry).points.at(index);
}

GridSamples evaluate_grid(const RandomEigenfunction& field, const GridGeometry& geometry) {
  GridSamples out{geometry, {}, {}};
  if (const auto* list = std::get_if<PointList>(&geometry)) {
    out.values.reserve(list->size());
    for (const auto& p : list->points) out.values.push_back(field.value(p));
    return out;
  }
  const auto& grid = std::get<LatLonGrid>(geometry);
  const int ell = field.degree();
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  const TrigTable trig(grid.phis, ell);
  const auto cw = field.cos_weights();
  const auto sw = field.sin_weights();

  out.values.resize(grid.size());
  std::vector<double> band(n);
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    const double t = grid.thetas[i];
    field.recurrence().band(std::cos(t), std::sin(t), band);
    double* row = out.values.data() + i * grid.phis.size();
    for (std::size_t j = 0; j < grid.phis.size(); ++j) {
      // Same operation order as RandomEigenfunction::value.
      const double* cm = trig.cos_m.data() + j * trig.stride;
      const double* sm = trig.sin_m.data() + j * trig.stride;
      double f = 0.0;
      for (std::size_t m = 0; m < n; ++m) f += band[m] * (cw[m] * cm[m] + sw[m] * sm[m]);
      row[j] = f;
    }
  }
  return out;
}

GridSamples evaluate_grid_jets(const RandomEigenfunction& field, const LatLonGrid& grid) {
  const int ell = field.degree();
  for (double t : grid.thetas) {
    if (in_pole_cap(ell, SpherePoint::make(t, 0.0))) {
      throw PoleProximityError("evaluate_grid_jets: band at colatitude " + std::to_string(t) +
                               " inside polar cap");
    }
  }
  const std::size_t n = static_cast<std::size_t>(ell) + 1;
  const TrigTable trig(grid.phis, ell);
  const auto cw = field.cos_weights();
  const auto sw = field.sin_weights();

  GridSamples out{grid, {}, {}};
  out.values.resize(grid.size());
  out.jets.resize(grid.size());

  std::vector<double> v(n), d1(n), d2(n);
  // Per-order coefficient rows; "c" rows multiply cos(m phi), "s" rows sin(m phi).
  std::vector<double> fc(n), fs(n), tc(n), ts(n), ttc(n), tts(n);
  std::vector<double> pc(n), ps(n), tpc(n), tps(n), ppc(n), pps(n);
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    const double theta = grid.thetas[i];
    const double st = std::sin(theta);
    const double cot = std::cos(theta) / st;
    field.recurrence().band_with_derivatives(std::cos(theta), st, v, d1, d2);
    for (std::size_t m = 0; m < n; ++m) {
      const double md = static_cast<double>(m);
      fc[m] = cw[m] * v[m];
      fs[m] = sw[m] * v[m];
      tc[m] = cw[m] * d1[m];
      ts[m] = sw[m] * d1[m];
      ttc[m] = cw[m] * d2[m];
      tts[m] = sw[m] * d2[m];
      // d/dphi: cos -> -m sin, sin -> m cos.
      pc[m] = md * sw[m] * v[m];
      ps[m] = -md * cw[m] * v[m];
      tpc[m] = md * sw[m] * d1[m];
      tps[m] = -md * cw[m] * d1[m];
      ppc[m] = -md * md * cw[m] * v[m];
      pps[m] = -md * md * sw[m] * v[m];
    }
    for (std::size_t j = 0; j < grid.phis.size(); ++j) {
      const double* c = trig.cos_m.data() + j * trig.stride;
      const double* s = trig.sin_m.data() + j * trig.stride;
      const double f = dot(fc.data(), c, n) + dot(fs.data(), s, n);
      const double f_t = dot(tc.data(), c, n) + dot(ts.data(), s, n);
      const double f_tt = dot(ttc.data(), c, n) + dot(tts.data(), s, n);
      const double f_p = dot(pc.data(), c, n) + dot(ps.data(), s, n);
      const double f_tp = dot(tpc.data(), c, n) + dot(tps.data(), s, n);
      const double f_pp = dot(ppc.data(), c, n) + dot(pps.data(), s, n);
      const std::size_t k = i * grid.phis.size() + j;
      Jet2& jet = out.jets[k];
      jet.value = f;
      jet.gradient << f_t, f_p / st;
      const double h12 = (f_tp - cot * f_p) / st;
      jet.hessian << f_tt, h12, h12, f_pp / (st * st) + cot * f_t;
      out.values[k] = f;
    }
  }
  return out;
}

void write_grid_csv(std::ostream& out, const GridSamples& samples) {
  out << "node,theta,phi,value\n";
  for (std::size_t k = 0; k < samples.values.size(); ++k) {
    const SpherePoint p = node_at(samples.geometry, k);
    out << k << ',' << format_real(p.theta()) << ',' << format_real(p.phi()) << ','
        << format_real(samples.values[k]) << '\n';
  }
}

}  // namespace sphtopo

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphtopo/errors.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo {

LatLonGrid Triangulation::rings() const {
  LatLonGrid g;
  for (int i = 1; i < bands; ++i) g.thetas.push_back(i * std::numbers::pi / bands);
  for (int j = 0; j < longitudes; ++j) g.phis.push_back(2.0 * std::numbers::pi * j / longitudes);
  return g;
}

Triangulation build_triangulation(int ell, int oversampling) {
  if (ell < 1) throw DomainError("build_triangulation: degree must be >= 1");
  if (oversampling < 4) throw DomainError("build_triangulation: oversampling must be >= 4");
  Triangulation mesh;
  mesh.oversampling = oversampling;
  mesh.bands = oversampling * ell;
  mesh.longitudes = 2 * oversampling * ell;
  const auto nb = static_cast<std::uint32_t>(mesh.bands);
  const auto nl = static_cast<std::uint32_t>(mesh.longitudes);

  const double limit = std::numbers::pi / (oversampling * ell);
  const double ring_step = std::numbers::pi / nb;
  const double zonal_step = 2.0 * std::numbers::pi / nl;  // equatorial arc, the longest
  if (ring_step > limit * (1.0 + 1e-12) || zonal_step > limit * (1.0 + 1e-12)) {
    throw DomainError("build_triangulation: edge length exceeds pi/(oversampling*ell)");
  }

  const LatLonGrid rings = mesh.rings();
  mesh.vertices.reserve(rings.size() + 2);
  mesh.vertices.push_back(SpherePoint::make(0.0, 0.0));
  for (std::size_t k = 0; k < rings.size(); ++k) mesh.vertices.push_back(rings.node(k));
  mesh.vertices.push_back(SpherePoint::make(std::numbers::pi, 0.0));

  const std::uint32_t north = 0;
  const std::uint32_t south = static_cast<std::uint32_t>(mesh.vertices.size() - 1);
  auto at = [nl](std::uint32_t ring, std::uint32_t j) { return 1 + ring * nl + (j % nl); };
  const std::uint32_t n_rings = nb - 1;

  mesh.edges.reserve(static_cast<std::size_t>(nl) * (3 * nb - 3));
  mesh.faces.reserve(static_cast<std::size_t>(nl) * 2 * (nb - 1));
  for (std::uint32_t j = 0; j < nl; ++j) {
    mesh.edges.push_back({north, at(0, j)});
    mesh.faces.push_back({north, at(0, j), at(0, j + 1)});
  }
  for (std::uint32_t i = 0; i < n_rings; ++i) {
    for (std::uint32_t j = 0; j < nl; ++j) {
      mesh.edges.push_back({at(i, j), at(i, j + 1)});
      if (i + 1 < n_rings) {
        const std::uint32_t a = at(i, j), b = at(i, j + 1), c = at(i + 1, j), d = at(i + 1, j + 1);
        mesh.edges.push_back({a, c});
        mesh.edges.push_back({b, c});
        mesh.faces.push_back({a, c, b});
        mesh.faces.push_back({b, c, d});
      }
    }
  }
  for (std::uint32_t j = 0; j < nl; ++j) {
    mesh.edges.push_back({at(n_rings - 1, j), south});
    mesh.faces.push_back({at(n_rings - 1, j + 1), at(n_rings - 1, j), south});
  }
  return mesh;
}

bool is_closed_sphere(const Triangulation& mesh) {
  const auto v = static_cast<long long>(mesh.vertices.size());
  const auto e = static_cast<long long>(mesh.edges.size());
  const auto f = static_cast<long long>(mesh.faces.size());
  if (v - e + f != 2) return false;

  auto edge_key = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::vector<std::uint64_t> listed;
  listed.reserve(mesh.edges.size());
  for (const auto& ed : mesh.edges) listed.push_back(edge_key(ed[0], ed[1]));
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return false;

  std::vector<std::uint64_t> used;
  used.reserve(3 * mesh.faces.size());
  for (const auto& t : mesh.faces) {
    used.push_back(edge_key(t[0], t[1]));
    used.push_back(edge_key(t[1], t[2]));
    used.push_back(edge_key(t[2], t[0]));
  }
  std::sort(used.begin(), used.end());
  std::size_t k = 0, edge = 0;
  while (k < used.size()) {
    std::size_t run = 1;
    while (k + run < used.size() && used[k + run] == used[k]) ++run;
    if (run != 2 || edge >= listed.size() || listed[edge] != used[k]) return false;
    ++edge;
    k += run;
  }
  return edge == listed.size();
}

GridSamples evaluate_on_triangulation(const RandomEigenfunction& field,
                                      const Triangulation& mesh) {
  const GridSamples ring_values = evaluate_grid(field, mesh.rings());
  GridSamples out{PointList{mesh.vertices}, {}, {}};
  out.values.reserve(mesh.vertices.size());
  out.values.push_back(field.value(mesh.vertices.front()));
  out.values.insert(out.values.end(), ring_values.values.begin(), ring_values.values.end());
  out.values.push_back(field.value(mesh.vertices.back()));
  return out;
}

EPCResult epc_mesh(const Triangulation& mesh, const GridSamples& samples,
                   const ThresholdInterval& interval) {
  if (samples.values.size() != mesh.vertices.size()) {
    throw DomainError("epc_mesh: sample count " + std::to_string(samples.values.size()) +
                      " does not match vertex count " + std::to_string(mesh.vertices.size()));
  }
  std::vector<char> inside(samples.values.size());
  long long v = 0, e = 0, f = 0;
  for (std::size_t k = 0; k < inside.size(); ++k) {
    inside[k] = interval.contains(samples.values[k]) ? 1 : 0;
    v += inside[k];
  }
  for (const auto& ed : mesh.edges) e += inside[ed[0]] & inside[ed[1]];
  for (const auto& t : mesh.faces) f += inside[t[0]] & inside[t[1]] & inside[t[2]];
  EPCResult r;
  r.method = EPCMethod::mesh;
  r.interval = interval;
  r.chi = static_cast<int>(v - e + f);
  r.critical_points = mesh.vertices.size();
  r.refinement = mesh.oversampling;
  return r;
}

}  // namespace sphtopo

#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "sphtopo/harmonics.hpp"

namespace sphtopo {

/// Tensor grid: every colatitude band crossed with every longitude.
/// Node (i, j) has flat index i * phis.size() + j.
struct LatLonGrid {
  std::vector<double> thetas;
  std::vector<double> phis;

  /// `bands` cell-centred colatitudes (i + 1/2) pi / bands and `longitudes`
  /// equispaced longitudes starting at 0.
  static LatLonGrid regular(int bands, int longitudes);

  std::size_t size() const noexcept { return thetas.size() * phis.size(); }
  SpherePoint node(std::size_t index) const;
};

/// Unstructured list of nodes (e.g. triangulation vertices).
struct PointList {
  std::vector<SpherePoint> points;
  std::size_t size() const noexcept { return points.size(); }
};

using GridGeometry = std::variant<LatLonGrid, PointList>;

std::size_t node_count(const GridGeometry& geometry);
SpherePoint node_at(const GridGeometry& geometry, std::size_t index);

/// Field values (and optionally jets) on the nodes of a geometry.
struct GridSamples {
  GridGeometry geometry;
  std::vector<double> values;
  std::vector<Jet2> jets;  // empty unless requested
};

/// Field values at all nodes.
///
/// Lat-lon grids take the banded path: one associated-Legendre band per
/// distinct colatitude (O(ell^2)) and an O(ell) longitude sum per node using
/// a trigonometric table built by angle-addition recurrence.
GridSamples evaluate_grid(const RandomEigenfunction& field, const GridGeometry& geometry);

/// Values and analytic jets on a lat-lon grid. Throws PoleProximityError if
/// any band lies inside a polar cap.
GridSamples evaluate_grid_jets(const RandomEigenfunction& field, const LatLonGrid& grid);

/// CSV with header `node,theta,phi,value`, 17 significant digits.
void write_grid_csv(std::ostream& out, const GridSamples& samples);

}  // namespace sphtopo

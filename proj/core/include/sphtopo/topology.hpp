#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sphtopo/grid.hpp"
#include "sphtopo/harmonics.hpp"
#include "sphtopo/interval.hpp"

namespace sphtopo {

/// Non-degenerate critical point of a field.
///
/// `index` counts the negative eigenvalues of minus the covariant Hessian:
/// 0 maximum, 1 saddle, 2 minimum.
struct CriticalPoint {
  SpherePoint location;
  double value = 0.0;
  int index = 0;
  std::array<double, 2> eigenvalues{};  // of the Hessian, ascending
  double residual = 0.0;                // frame gradient norm at convergence
};

/// Newton search parameters. Length scales are in units of 1/ell and
/// gradient/curvature scales in units of ell^2.
struct SearchConfig {
  int lattice_factor = 4;           // seed spacing pi / (factor * ell)
  int refined_lattice_factor = 8;   // used once if the Morse check fails
  double dedup_radius = 1e-3;       // geodesic, times 1/ell
  int max_iterations = 30;
  double tol_grad = 1e-9;           // times ell^2
  double degeneracy_floor = 1e-8;   // times ell^2
  double seed_reach = 2.0;          // accept seeds whose Newton step <= reach * spacing
};

struct CriticalPointSet {
  std::vector<CriticalPoint> points;
  int lattice_factor = 0;           // factor that produced `points`
  std::size_t newton_starts = 0;

  /// (maxima, saddles, minima) over the whole sphere.
  std::array<int, 3> counts() const;
};

/// All critical points of `field`.
///
/// Seeds come from a colatitude/longitude lattice outside the polar caps
/// (nodes whose predicted Newton step is within reach) plus sweeps of each
/// cap in a rotated chart. Converged points closer than the dedup radius are
/// merged. The alternating count must equal 2; otherwise the lattice is
/// refined once and the search repeated.
///
/// Throws NonMorseError if a Hessian eigenvalue falls below the degeneracy
/// floor and CompletenessError if the global check still fails.
CriticalPointSet find_critical_points(const RandomEigenfunction& field,
                                      const SearchConfig& config = {});

/// One search pass at the given lattice factor, without the global check.
CriticalPointSet search_critical_points(const RandomEigenfunction& field, int lattice_factor,
                                        const SearchConfig& config = {});

enum class EPCMethod { morse, mesh };

const char* to_string(EPCMethod method);

struct EPCResult {
  int chi = 0;
  EPCMethod method = EPCMethod::morse;
  std::array<int, 3> counts{};  // morse only: maxima, saddles, minima inside I
  ThresholdInterval interval = ThresholdInterval::whole_line();
  bool boundary_degenerate = false;  // a critical value sits on an endpoint
  std::size_t critical_points = 0;   // morse: total found; mesh: vertices
  int refinement = 0;                // morse: lattice factor; mesh: oversampling
};

/// Euler characteristic of f^{-1}(I) from the critical points:
/// chi = #max - #saddle + #min over points with value in I.
EPCResult epc_morse(const CriticalPointSet& points, const ThresholdInterval& interval,
                    double tol_value = 1e-9);

/// Closed triangulated sphere built from colatitude rings.
///
/// Vertex 0 is the north pole, then `bands - 1` rings of `longitudes`
/// vertices each (ring i at colatitude i*pi/bands), then the south pole.
struct Triangulation {
  int oversampling = 0;
  int bands = 0;
  int longitudes = 0;
  std::vector<SpherePoint> vertices;
  std::vector<std::array<std::uint32_t, 2>> edges;
  std::vector<std::array<std::uint32_t, 3>> faces;

  /// Ring colatitudes x longitudes, in vertex order (poles excluded).
  LatLonGrid rings() const;
};

/// oversampling*ell bands and 2*oversampling*ell longitudes; quads split in
/// two triangles, triangle fans at the poles.
/// Throws DomainError for oversampling < 4 or ell < 1, and
/// DomainError if a ring or meridian edge exceeds pi/(oversampling*ell).
Triangulation build_triangulation(int ell, int oversampling);

/// Checks V - E + F = 2 and that every edge borders exactly two faces.
bool is_closed_sphere(const Triangulation& mesh);

/// Field values at every triangulation vertex (banded evaluation).
GridSamples evaluate_on_triangulation(const RandomEigenfunction& field,
                                      const Triangulation& mesh);

/// chi = V_I - E_I + F_I where a simplex counts iff all of its vertices
/// carry values inside I.
EPCResult epc_mesh(const Triangulation& mesh, const GridSamples& samples,
                   const ThresholdInterval& interval);

/// CSV rows `seed,theta,phi,value,index,residual` (header included).
void write_critical_points_csv(std::ostream& out, std::uint64_t seed,
                               const CriticalPointSet& points);

/// Header `seed,method,interval_lo,interval_hi,chi,mu0,mu1,mu2`.
void write_epc_csv_header(std::ostream& out);
void write_epc_csv_row(std::ostream& out, std::uint64_t seed, const EPCResult& result);

}  // namespace sphtopo

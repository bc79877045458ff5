#include <ostream>

#include "sphtopo/format.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo {

const char* to_string(EPCMethod method) {
  return method == EPCMethod::morse ? "morse" : "mesh";
}

EPCResult epc_morse(const CriticalPointSet& points, const ThresholdInterval& interval,
                    double tol_value) {
  EPCResult r;
  r.method = EPCMethod::morse;
  r.interval = interval;
  r.critical_points = points.points.size();
  r.refinement = points.lattice_factor;
  for (const auto& p : points.points) {
    if (interval.endpoint_distance(p.value) <= tol_value) r.boundary_degenerate = true;
    if (interval.contains(p.value)) ++r.counts[static_cast<std::size_t>(p.index)];
  }
  r.chi = r.counts[0] - r.counts[1] + r.counts[2];
  return r;
}

void write_critical_points_csv(std::ostream& out, std::uint64_t seed,
                               const CriticalPointSet& points) {
  out << "seed,theta,phi,value,index,residual\n";
  for (const auto& p : points.points) {
    out << seed << ',' << format_real(p.location.theta()) << ',' << format_real(p.location.phi())
        << ',' << format_real(p.value) << ',' << p.index << ',' << format_real(p.residual) << '\n';
  }
}

void write_epc_csv_header(std::ostream& out) {
  out << "seed,method,interval_lo,interval_hi,chi,mu0,mu1,mu2\n";
}

void write_epc_csv_row(std::ostream& out, std::uint64_t seed, const EPCResult& r) {
  out << seed << ',' << to_string(r.method) << ',' << format_real(r.interval.lower()) << ','
      << format_real(r.interval.upper()) << ',' << r.chi << ',';
  if (r.method == EPCMethod::morse) {
    out << r.counts[0] << ',' << r.counts[1] << ',' << r.counts[2];
  } else {
    out << ",,";
  }
  out << '\n';
}

}  // namespace sphtopo

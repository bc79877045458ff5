#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "sphtopo/topology.hpp"

namespace sphtopo {
namespace {

TEST(EpcMorse, WholeLineIsTwo) {
  const auto set = find_critical_points(synthesize(9, 4));
  const auto r = epc_morse(set, ThresholdInterval::whole_line());
  EXPECT_EQ(r.chi, 2);
  EXPECT_EQ(r.method, EPCMethod::morse);
  EXPECT_EQ(r.chi, r.counts[0] - r.counts[1] + r.counts[2]);
  EXPECT_EQ(r.critical_points, set.points.size());
}

TEST(EpcMorse, AboveMaximumIsEmpty) {
  const auto set = find_critical_points(synthesize(9, 4));
  double top = -1e300;
  for (const auto& p : set.points) top = std::max(top, p.value);
  const auto r = epc_morse(set, ThresholdInterval::half_line(top + 0.01));
  EXPECT_EQ(r.chi, 0);
  EXPECT_EQ(r.counts, (std::array<int, 3>{0, 0, 0}));
}

TEST(EpcMorse, FarBelowEverythingIsSphere) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto set = find_critical_points(synthesize(10, seed));
    EXPECT_EQ(epc_morse(set, ThresholdInterval::half_line(-6.0)).chi, 2);
  }
}

TEST(EpcMorse, FlagsEndpointOnCriticalValue) {
  const auto set = find_critical_points(synthesize(6, 2));
  const double v = set.points.front().value;
  EXPECT_TRUE(epc_morse(set, ThresholdInterval::half_line(v)).boundary_degenerate);
  EXPECT_FALSE(epc_morse(set, ThresholdInterval::half_line(v + 1e-3)).boundary_degenerate ||
               std::any_of(set.points.begin(), set.points.end(),
                           [&](const CriticalPoint& p) { return std::abs(p.value - v - 1e-3) < 1e-9; }));
}

// Sweeping u downward through the sorted critical values changes chi by
// +1 at maxima and minima and by -1 at saddles.
TEST(EpcMorse, MonotoneSweepThroughCriticalValues) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto set = find_critical_points(synthesize(7, 100 + seed));
    auto pts = set.points;
    std::sort(pts.begin(), pts.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.value > b.value; });
    int previous = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double next = k + 1 < pts.size() ? pts[k + 1].value : pts[k].value - 1.0;
      const double u = 0.5 * (pts[k].value + next);
      const int chi = epc_morse(set, ThresholdInterval::half_line(u)).chi;
      EXPECT_EQ(chi - previous, pts[k].index == 1 ? -1 : 1) << seed << " " << k;
      previous = chi;
    }
    EXPECT_EQ(previous, 2);
  }
}

TEST(EpcMesh, TrivialIntervals) {
  const auto f = synthesize(6, 1);
  const auto mesh = build_triangulation(6, 4);
  const auto samples = evaluate_on_triangulation(f, mesh);
  EXPECT_EQ(epc_mesh(mesh, samples, ThresholdInterval::whole_line()).chi, 2);
  const double lo = *std::min_element(samples.values.begin(), samples.values.end());
  EXPECT_EQ(epc_mesh(mesh, samples, ThresholdInterval::make(-1e9, lo - 1e-6)).chi, 0);
  const auto r = epc_mesh(mesh, samples, ThresholdInterval::half_line(0.3));
  EXPECT_EQ(r.method, EPCMethod::mesh);
  EXPECT_EQ(r.refinement, 4);
  EXPECT_EQ(r.critical_points, mesh.vertices.size());
}

TEST(EpcMesh, AgreesWithMorseOnFineMesh) {
  const int ell = 5;
  const auto mesh = build_triangulation(ell, 32);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = synthesize(ell, seed);
    const auto set = find_critical_points(f);
    const auto samples = evaluate_on_triangulation(f, mesh);
    for (double u : {-1.5, -0.5, 0.5, 1.5}) {
      const auto i = ThresholdInterval::half_line(u);
      EXPECT_EQ(epc_mesh(mesh, samples, i).chi, epc_morse(set, i).chi) << seed << " " << u;
    }
  }
}

TEST(EpcCsv, Layout) {
  const auto set = find_critical_points(synthesize(4, 8));
  std::ostringstream out;
  write_epc_csv_header(out);
  write_epc_csv_row(out, 8, epc_morse(set, ThresholdInterval::half_line(0.5)));
  const auto mesh = build_triangulation(4, 4);
  write_epc_csv_row(out, 8, epc_mesh(mesh, evaluate_on_triangulation(synthesize(4, 8), mesh),
                                     ThresholdInterval::make(-INFINITY, 1.0)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "seed,method,interval_lo,interval_hi,chi,mu0,mu1,mu2");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("8,morse,0.5,inf,", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("8,mesh,-inf,1,", 0), 0u);
  EXPECT_EQ(line.substr(line.size() - 2), ",,");
}

}  // namespace
}  // namespace sphtopo

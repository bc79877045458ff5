#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sphtopo/errors.hpp"
#include "sphtopo/topology.hpp"

namespace sphtopo {
namespace {

TEST(Triangulation, ClosedSphere) {
  for (int ell : {1, 5, 13}) {
    for (int os : {4, 8}) {
      const auto mesh = build_triangulation(ell, os);
      EXPECT_EQ(static_cast<long>(mesh.vertices.size()) - static_cast<long>(mesh.edges.size()) +
                    static_cast<long>(mesh.faces.size()),
                2);
      EXPECT_TRUE(is_closed_sphere(mesh));
      EXPECT_EQ(mesh.bands, os * ell);
      EXPECT_EQ(mesh.longitudes, 2 * os * ell);
    }
  }
}

TEST(Triangulation, EveryEdgeBordersTwoFaces) {
  const auto mesh = build_triangulation(3, 4);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> uses;
  for (const auto& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      auto a = f[k], b = f[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++uses[{a, b}];
    }
  }
  EXPECT_EQ(uses.size(), mesh.edges.size());
  for (const auto& [edge, n] : uses) EXPECT_EQ(n, 2);
  for (const auto& e : mesh.edges) EXPECT_EQ(uses.count({std::min(e[0], e[1]), std::max(e[0], e[1])}), 1u);
}

TEST(Triangulation, NoDuplicateVertices) {
  const auto mesh = build_triangulation(4, 4);
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < mesh.vertices.size(); ++j) {
      ASSERT_GT((mesh.vertices[i].cartesian() - mesh.vertices[j].cartesian()).norm(), 1e-12);
    }
  }
}

TEST(Triangulation, FaceCountAtDegree40) {
  EXPECT_GE(build_triangulation(40, 8).faces.size(), 200000u);
}

TEST(Triangulation, RejectsCoarseOversampling) {
  EXPECT_THROW(build_triangulation(10, 3), DomainError);
  EXPECT_THROW(build_triangulation(0, 8), DomainError);
}

TEST(Triangulation, RingsGeometry) {
  const auto mesh = build_triangulation(2, 4);
  const auto rings = mesh.rings();
  EXPECT_EQ(rings.thetas.size(), static_cast<std::size_t>(mesh.bands - 1));
  EXPECT_EQ(rings.phis.size(), static_cast<std::size_t>(mesh.longitudes));
  EXPECT_EQ(rings.size() + 2, mesh.vertices.size());
}

}  // namespace
}  // namespace sphtopo

#include <doctest.h>

#include "torus2/cycle_colorings.hpp"
#include "torus2/errors.hpp"
#include "torus2/euler_orient.hpp"
#include "torus2/orbit_space.hpp"

using namespace torus2;
using namespace torus2::euler;
using space::SurfaceWithBoundary;

TEST_CASE("euler_total examples") {
  CHECK(euler_total(space::build_polygon(3)) == 1);
  CHECK(euler_total(space::build_polygon(4)) == 0);
  CHECK(euler_total(space::build_vertex_free_surface(0, 2)) == 0);
  CHECK(euler_total(space::build_prism()) == 0);
}

TEST_CASE("euler_total by hand on a triangle") {
  // top: 4 (1 - 0); edges: 2 (1 - 2) each; vertices: 1 (1 - 0) each
  const auto tri = space::build_polygon(3);
  auto data = annotations(tri);
  long long sum = 0;
  for (const auto& f : tri.faces()) sum += (1LL << f.dim) * (data[f.id]->chi - data[f.id]->chi_boundary);
  CHECK(sum == 4 - 6 + 3);
  CHECK(euler_total(tri, data) == sum);
}

TEST_CASE("euler_total on simplices is the projective-space Euler characteristic") {
  for (int n = 1; n <= 6; ++n) CHECK(euler_total(space::build_simplex(n)) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("euler_2d examples") {
  CHECK(euler_2d(SurfaceWithBoundary::disk(3)) == 1);
  CHECK(euler_2d(SurfaceWithBoundary::torus_minus_disk(3)) == -7);
  CHECK(euler_2d(SurfaceWithBoundary::disk(0)) == 4);
  CHECK(euler_total(space::build_surface_poset(SurfaceWithBoundary::disk(0))) == 4);
}

TEST_CASE("euler_2d and euler_total agree on surface posets") {
  for (int g = 0; g <= 3; ++g) {
    for (int m : {0, 2, 3, 4, 7, 12}) {
      const SurfaceWithBoundary o(true, g, m);
      CHECK(euler_2d(o) == euler_total(space::build_surface_poset(o)));
      if (g > 0) {
        const SurfaceWithBoundary n(false, g, m);
        CHECK(euler_2d(n) == euler_total(space::build_surface_poset(n)));
      }
    }
  }
}

TEST_CASE("missing annotations") {
  const auto p = space::build_polygon(4);
  auto data = annotations(p);
  data[2].reset();
  CHECK_THROWS_AS(euler_total(p, data), InvalidArgument);
  data.pop_back();
  CHECK_THROWS_AS(euler_total(p, data), InvalidArgument);
  std::vector<space::Face> faces(p.faces().begin(), p.faces().end());
  faces[0].euler.reset();
  CHECK_THROWS_AS(euler_total(space::FacePoset(2, faces)), InvalidArgument);
}

TEST_CASE("orientability examples") {
  const auto alternating = cycles::CycleColoring(3, {0, 1, 0, 1, 0, 1});
  const auto three = cycles::CycleColoring(3, {0, 1, 2, 0, 1, 2});
  CHECK(is_orientable(SurfaceWithBoundary::disk(6), alternating));
  CHECK_FALSE(is_orientable(SurfaceWithBoundary::disk(6), three));
  CHECK_FALSE(is_orientable(SurfaceWithBoundary::projective_plane_minus_disk(6), alternating));
  CHECK(is_orientable(SurfaceWithBoundary::torus_minus_disk(6), alternating));
  CHECK_THROWS_AS(is_orientable(SurfaceWithBoundary::disk(5), alternating), InvalidArgument);
  CHECK_THROWS_AS(is_orientable(SurfaceWithBoundary::disk(2), cycles::CycleColoring(4, {3, 1})), InvalidArgument);
}

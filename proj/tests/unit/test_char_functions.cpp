#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "torus2/char_functions.hpp"
#include "torus2/cycle_colorings.hpp"
#include "torus2/errors.hpp"
#include "torus2/orbit_space.hpp"

using namespace torus2;
using namespace torus2::charfn;

namespace {

oracle::FaceList face_list(const space::FacePoset& p) {
  oracle::FaceList out;
  out.facets = p.facet_count();
  for (const auto& f : p.faces()) {
    if (f.dim < p.dim()) out.masks.push_back(f.facets);
  }
  return out;
}

CharacteristicFunction from_bits(int n, std::vector<std::uint32_t> bits) {
  std::vector<gf2::Vector> v;
  for (auto b : bits) v.emplace_back(n, b);
  return CharacteristicFunction(std::move(v));
}

// Colors 0, 1, 2 of a 3-colored cycle read as e1, e2, e1+e2.
CharacteristicFunction from_coloring(const cycles::CycleColoring& c) {
  std::vector<std::uint32_t> bits;
  for (int i = 0; i < c.arcs(); ++i) bits.push_back(c[i] + 1u);
  return from_bits(2, bits);
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(from_bits(2, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(CharacteristicFunction({gf2::Vector(2, 1), gf2::Vector(3, 1)}), InvalidArgument);
  CHECK_THROWS_AS(CharacteristicFunction(std::vector<gf2::Vector>{}), InvalidArgument);
  CHECK(from_bits(2, {1, 2, 3}).code() == 1 * 16 + 2 * 4 + 3);
  CHECK_THROWS_AS(FacetAutomorphism({0, 0, 1}), InvalidArgument);
  CHECK(FacetAutomorphism({1, 2, 0}).inverse() == FacetAutomorphism({2, 0, 1}));
}

TEST_CASE("enumeration examples") {
  for (int m = 3; m <= 8; ++m) {
    CHECK(enumerate_char_functions(space::build_polygon(m), 2).size() == cycles::count_closed_form(m));
  }
  CHECK(enumerate_char_functions(space::build_prism(), 3).size() == 840);
  CHECK(enumerate_char_functions(space::build_simplex(2), 2).size() == 6);
  CHECK(enumerate_char_functions(space::build_simplex(3), 3).size() == 168);
  CHECK_THROWS_AS(enumerate_char_functions(space::build_prism(), 3, Budget{24, 100, 10}), CapacityError);
}

TEST_CASE("enumeration matches the filtering oracle") {
  const std::vector<std::pair<space::FacePoset, int>> cases{
      {space::build_polygon(3), 2}, {space::build_polygon(5), 2}, {space::build_polygon(6), 2},
      {space::build_simplex(3), 3}, {space::build_prism(), 3},    {space::build_vertex_free_surface(0, 2), 2},
  };
  for (const auto& [p, n] : cases) {
    const auto got = enumerate_char_functions(p, n);
    const auto want = oracle::filter_char_functions(face_list(p), n);
    REQUIRE(got.size() == want.size());
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (std::size_t i = 0; i < got.size(); ++i) {
      for (int f = 0; f < p.facet_count(); ++f) CHECK(got[i][f].bits() == want[i][f]);
      CHECK(is_valid(p, got[i]));
    }
  }
}

TEST_CASE("validity") {
  const auto prism = space::build_prism();
  CHECK(is_valid(prism, from_bits(3, {1, 2, 4, 3, 4})));
  CHECK_FALSE(is_valid(prism, from_bits(3, {1, 1, 4, 3, 4})));
  CHECK_FALSE(is_valid(prism, from_bits(3, {1, 2, 3, 3, 4})));
  CHECK_FALSE(is_valid(prism, from_bits(3, {1, 2, 4})));
}

TEST_CASE("GL action") {
  const auto p = space::build_prism();
  const auto lambdas = enumerate_char_functions(p, 3);
  const auto gl = gf2::enumerate_gl(3);
  for (std::size_t i = 0; i < lambdas.size(); i += 37) {
    CHECK(gl_act(gf2::Matrix::identity(3), lambdas[i]) == lambdas[i]);
    for (std::size_t g = 0; g < gl.size(); g += 13) {
      CHECK(gl_act(gl[g], gl_act(gl[g].inverse(), lambdas[i])) == lambdas[i]);
      CHECK(is_valid(p, gl_act(gl[g], lambdas[i])));
    }
  }
  const auto standard = from_bits(3, {1, 2, 4, 1, 1});
  for (const auto& sigma : gl) {
    const auto moved = gl_act(sigma, standard);
    for (int f = 0; f < 3; ++f) CHECK(moved[f] == sigma.column(f));
  }
  const std::vector<std::uint32_t> singular{1, 1, 4};
  CHECK_THROWS_AS(gl_act(gf2::Matrix::from_column_bits(3, singular), standard), InvalidArgument);
}

TEST_CASE("facet automorphism action") {
  const int m = 6;
  const auto c = cycles::CycleColoring(3, {0, 1, 0, 2, 1, 2});
  const auto lambda = from_coloring(c);
  CHECK(aut_act(FacetAutomorphism::identity(m), lambda) == lambda);
  for (const auto& g : cycles::dihedral_group(m)) {
    // lambda o h with h = g^-1 is the coloring moved by g
    std::vector<int> image(m);
    const auto inv = g.inverse();
    for (int i = 0; i < m; ++i) image[i] = inv.arc_image(i);
    const FacetAutomorphism h(image);
    CHECK(aut_act(h, lambda) == from_coloring(cycles::act_dihedral(g, c)));
    CHECK(aut_act(h, aut_act(h.inverse(), lambda)) == lambda);
  }
}

TEST_CASE("automorphism groups") {
  for (int m = 3; m <= 8; ++m) CHECK(facet_automorphism_group(space::build_polygon(m)).size() == 2u * m);
  CHECK(facet_automorphism_group(space::build_simplex(2)).size() == 6);
  CHECK(facet_automorphism_group(space::build_simplex(3)).size() == 24);
  CHECK(facet_automorphism_group(space::build_simplex(4)).size() == 120);
  CHECK(facet_automorphism_group(space::build_prism()).size() == 12);
  CHECK(facet_automorphism_group(space::build_surface_poset(space::SurfaceWithBoundary::disk(2))).size() == 2);
}

TEST_CASE("dihedral shortcut agrees with brute force and the mask oracle") {
  for (int m = 3; m <= 7; ++m) {
    const auto p = space::build_polygon(m);
    const auto fast = facet_automorphism_group(p);
    CHECK(fast == facet_automorphisms_brute_force(p));
    const auto want = oracle::mask_automorphisms(face_list(p));
    REQUIRE(fast.size() == want.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(std::equal(fast[i].image().begin(), fast[i].image().end(), want[i].begin()));
    }
  }
  const auto prism = space::build_prism();
  CHECK(facet_automorphism_group(prism).size() == oracle::mask_automorphisms(face_list(prism)).size());
  for (const auto& h : facet_automorphism_group(prism)) CHECK(is_automorphism(prism, h));
  CHECK_FALSE(is_automorphism(prism, FacetAutomorphism({2, 1, 0, 3, 4})));
}

TEST_CASE("GL orbit examples") {
  const auto prism = count_gl_orbits(space::build_prism(), 3);
  CHECK(prism.orbits == 5);
  CHECK(prism.free);
  const auto tri = count_gl_orbits(space::build_simplex(2), 2);
  CHECK(tri.orbits == 1);
  CHECK(tri.free);
  const auto square = count_gl_orbits(space::build_polygon(4), 2);
  CHECK(square.orbits == 3);
  CHECK(square.free);
  // no vertex: the action need not be free
  const auto annulus = count_gl_orbits(space::build_vertex_free_surface(0, 2), 2);
  CHECK(annulus.orbits == 2);
  CHECK_FALSE(annulus.free);
}

TEST_CASE("double coset examples") {
  for (int m = 3; m <= 10; ++m) {
    CHECK(count_double_cosets(space::build_polygon(m), 2) == cycles::count_double_cosets_closed_form_C(m));
  }
  CHECK(count_double_cosets(space::build_polygon(3), 2) == 1);
  CHECK(count_double_cosets(space::build_simplex(3), 3) == 1);
  CHECK(count_double_cosets(space::build_prism(), 3) == 3);
}

TEST_CASE("double cosets against an explicit orbit search") {
  // Union of GL x Aut orbits by direct closure, over the simplex and prism.
  for (const auto& [p, n] : std::vector<std::pair<space::FacePoset, int>>{{space::build_simplex(3), 3},
                                                                           {space::build_prism(), 3}}) {
    const auto lambdas = enumerate_char_functions(p, n);
    const auto gl = gf2::enumerate_gl(n);
    const auto auts = facet_automorphism_group(p);
    std::set<CharacteristicFunction> seen;
    std::size_t orbits = 0;
    for (const auto& l : lambdas) {
      if (seen.count(l)) continue;
      ++orbits;
      for (const auto& g : gl) {
        for (const auto& h : auts) seen.insert(gl_act(g, aut_act(h, l)));
      }
    }
    CHECK(count_double_cosets(p, n) == orbits);
  }
}

TEST_CASE("formatting") {
  const auto l = from_bits(3, {1, 2, 4});
  CHECK(format_char_function(l) == "0:1,1:2,2:4");
  CHECK(parse_char_function("0:1,1:2,2:4", 3) == l);
  CHECK(parse_char_function("1:2,0:1,2:4", 3) == l);
  CHECK_THROWS_AS(parse_char_function("0:1,2:4", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_char_function("0:9", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_char_function("0:x", 3), InvalidArgument);
}

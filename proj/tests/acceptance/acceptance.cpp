// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "torus2/char_functions.hpp"
#include "torus2/classification.hpp"
#include "torus2/cycle_colorings.hpp"
#include "torus2/euler_orient.hpp"
#include "torus2/orbit_space.hpp"
#include "torus2/orbits.hpp"
#include "torus2/quotient_complex.hpp"

using namespace torus2;
using space::SurfaceWithBoundary;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 = no limit
  std::function<std::string()> check;  // empty string on success
};

#define EXPECT(cond, msg)                \
  do {                                   \
    if (!(cond)) return std::string(msg); \
  } while (0)

std::string at(const std::string& what, int m) { return what + " at m=" + std::to_string(m); }

std::string cycle_counts() {
  for (int m = 2; m <= 14; ++m) {
    const BigInt expected = (BigInt(1) << m) + (m % 2 ? -2 : 2);
    EXPECT(BigInt(cycles::enumerate_colorings(m, 3).size()) == expected, at("brute-force count", m));
    EXPECT(cycles::count_closed_form(m) == expected, at("closed form", m));
  }
  for (int m = 3; m <= 30; ++m) {
    EXPECT(cycles::count_closed_form(m) + cycles::count_closed_form(m - 1) == 3 * (BigInt(1) << (m - 1)),
           at("recurrence", m));
  }
  return "";
}

std::string dihedral_orbits() {
  const int listed[] = {3, 1, 6, 3, 13, 9, 30, 29, 78};
  for (int m = 2; m <= 10; ++m) EXPECT(cycles::count_orbits_closed_form_B(m) == listed[m - 2], at("listed value", m));
  for (int m = 2; m <= 14; ++m) {
    const auto lambda = cycles::enumerate_colorings(m, 3);
    const auto orbits = cycles::burnside_orbit_count(lambda, cycles::dihedral_actions(m));
    EXPECT(cycles::count_orbits_closed_form_B(m) == orbits, at("Burnside oracle", m));
  }
  return "";
}

std::string double_cosets() {
  const int listed[] = {1, 1, 2, 1, 4, 3, 8, 8, 18, 21, 48};
  for (int m = 2; m <= 12; ++m) {
    EXPECT(cycles::count_double_cosets_closed_form_C(m) == listed[m - 2], at("listed value", m));
  }
  for (int m = 2; m <= 13; ++m) {
    const auto group = cycles::combined_actions(m, 3);
    EXPECT(group.size() == 12u * static_cast<unsigned>(m), at("combined group order", m));
    const auto orbits = cycles::burnside_orbit_count(cycles::enumerate_colorings(m, 3), group);
    EXPECT(cycles::count_double_cosets_closed_form_C(m) == orbits, at("combined-group oracle", m));
  }
  return "";
}

std::string prism_census() {
  const auto p = space::build_prism();
  const auto lambdas = charfn::enumerate_char_functions(p, 3);
  EXPECT(lambdas.size() == 840, "|Lambda(P3)| = " + std::to_string(lambdas.size()));
  const auto gl = charfn::count_gl_orbits(p, lambdas);
  EXPECT(gl.orbits == 5, "GL-orbits = " + std::to_string(gl.orbits));
  EXPECT(gl.free, "GL action on Lambda(P3) is not free");
  EXPECT(gl.orbits * gf2::enumerate_gl(3).size() == lambdas.size(), "840 != 5 * 168");
  return "";
}

std::string euler_agreement() {
  for (int m = 3; m <= 12; ++m) {
    const auto total = euler::euler_total(space::build_polygon(m));
    EXPECT(total == euler::euler_2d(SurfaceWithBoundary::disk(m)), at("polygon", m));
    EXPECT(total == 4 - m, at("polygon value", m));
  }
  EXPECT(euler::euler_total(space::build_vertex_free_surface(0, 2)) == 0, "S1 x I model is not 0");
  return "";
}

std::string small_cover_census() {
  for (int m = 3; m <= 10; ++m) {
    std::set<cover::SurfaceType> types;
    for (const auto& lambda : cycles::enumerate_colorings(m, 3)) {
      const auto c = cover::build_small_cover(m, lambda);
      EXPECT(cover::connected_components(c) == 1, at("disconnected cover " + lambda.to_string(), m));
      EXPECT(cover::every_edge_doubly_incident(c), at("open cover " + lambda.to_string(), m));
      EXPECT(cover::is_closed_surface(c), at("vertex link not a circle " + lambda.to_string(), m));
      EXPECT(cover::euler_of_complex(c) == 4 - m, at("Euler characteristic " + lambda.to_string(), m));
      const bool by_colors = euler::is_orientable(SurfaceWithBoundary::disk(m), lambda);
      EXPECT(by_colors == cover::orientable_by_propagation(c), at("orientability disagreement " + lambda.to_string(), m));
      types.insert(cover::surface_type(c, lambda));
    }
    EXPECT(types.size() == (m % 2 ? 1u : 2u), at("type count", m));
  }
  return "";
}

std::string surface_classes() {
  const std::pair<const char*, std::size_t> presets[] = {{"disk", 1}, {"rp2", 4}, {"torus", 5}};
  for (const auto& [name, h] : presets) {
    const auto h1 = classify::H1Model::preset(name);
    EXPECT(classify::compute_h(h1) == h, std::string("h(") + name + ")");
    for (int m = 2; m <= 14; ++m) {
      const auto q = std::string(name) == "disk"  ? SurfaceWithBoundary::disk(m)
                     : std::string(name) == "rp2" ? SurfaceWithBoundary::projective_plane_minus_disk(m)
                                                  : SurfaceWithBoundary::torus_minus_disk(m);
      const auto b = cycles::burnside_orbit_count(cycles::enumerate_colorings(m, 3), cycles::dihedral_actions(m));
      EXPECT(classify::count_equivariant_classes_surface(q, h) == BigInt(h) * b, at(std::string(name) + " product", m));
      if (m <= 7) {
        EXPECT(classify::count_equivariant_classes(h1, space::build_surface_poset(q), 2) == h * b,
               at(std::string(name) + " direct count", m));
      }
    }
  }
  EXPECT(classify::count_equivariant_classes_surface(SurfaceWithBoundary::torus_minus_disk(2), 5) == 15,
         "torus at m=2");
  return "";
}

std::string freeness() {
  std::vector<std::pair<std::string, space::FacePoset>> posets;
  for (int m = 3; m <= 10; ++m) posets.emplace_back("polygon " + std::to_string(m), space::build_polygon(m));
  for (int n = 1; n <= 3; ++n) posets.emplace_back("simplex " + std::to_string(n), space::build_simplex(n));
  posets.emplace_back("prism", space::build_prism());
  posets.emplace_back("2-gon", space::build_surface_poset(SurfaceWithBoundary::disk(2)));
  for (const auto& [name, p] : posets) {
    EXPECT(p.has_vertex(), name + " has no vertex");
    const int n = p.dim();
    const auto lambdas = charfn::enumerate_char_functions(p, n);
    const auto gl = gf2::enumerate_gl(n);
    const charfn::FunctionIndex index(lambdas);
    const auto action = charfn::lambda_action(lambdas, index, gl, {}, false);
    for (std::size_t order : stabilizer_orders(action)) EXPECT(order == 1, name + ": nontrivial stabilizer");
  }
  return "";
}

std::string s_colors() {
  for (int s : {2, 4, 5}) {
    for (int m = 2; m <= 10; ++m) {
      const auto lambda = cycles::enumerate_colorings(m, s);
      const std::string where = "s=" + std::to_string(s);
      EXPECT(cycles::count_closed_form(m, s) == lambda.size(), at(where + " A_s", m));
      const auto orbits = cycles::burnside_orbit_count(lambda, cycles::dihedral_actions(m));
      EXPECT(cycles::count_orbits_closed_form_B_scolor(m, s) == orbits, at(where + " orbits", m));
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "A(m) brute force m<=14, recurrence m<=30", 10, cycle_counts},
      {2, "B(m) listed values and Burnside oracle m<=14", 30, dihedral_orbits},
      {3, "C(m) listed values and 12m-element oracle m<=13", 60, double_cosets},
      {4, "prism: 840 functions, 5 free GL(3)-orbits", 10, prism_census},
      {5, "euler_total = euler_2d on polygons 3..12 and S1 x I", 0, euler_agreement},
      {6, "small covers m=3..10: connected, closed, chi=4-m, type count by parity", 0, small_cover_census},
      {7, "h = 1, 4, 5 and h*B(m) for m=2..14, torus m=2 gives 15", 0, surface_classes},
      {8, "free GL action on built-in posets with a vertex, n<=3", 0, freeness},
      {9, "s in {2,4,5}, m=2..10: A_s and orbit formula vs oracles", 0, s_colors},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      problem = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += !problem.empty();
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, problem.empty() ? "" : " -- ", problem.c_str());
  }
  return failures;
}

#include "torus2/euler_orient.hpp"

#include <string>

#include "torus2/errors.hpp"

namespace torus2::euler {

FaceEulerData annotations(const space::FacePoset& p) {
  FaceEulerData out;
  out.reserve(static_cast<std::size_t>(p.face_count()));
  for (const auto& f : p.faces()) out.push_back(f.euler);
  return out;
}

long long euler_total(const space::FacePoset& p, const FaceEulerData& data) {
  if (static_cast<int>(data.size()) != p.face_count()) {
    throw InvalidArgument("Euler data covers " + std::to_string(data.size()) + " faces, poset has " +
                          std::to_string(p.face_count()));
  }
  long long total = 0;
  for (const auto& f : p.faces()) {
    const auto& e = data[static_cast<std::size_t>(f.id)];
    if (!e) throw InvalidArgument("face " + std::to_string(f.id) + " has no Euler annotation");
    total += (1LL << f.dim) * (e->chi - e->chi_boundary);
  }
  return total;
}

long long euler_total(const space::FacePoset& p) { return euler_total(p, annotations(p)); }

long long euler_2d(const space::SurfaceWithBoundary& q) { return 4LL * q.euler() - q.vertices(); }

bool is_orientable(const space::SurfaceWithBoundary& q, const cycles::CycleColoring& lambda) {
  if (q.vertices() == 0) throw InvalidArgument("boundary without vertices carries no coloring");
  if (lambda.arcs() != q.vertices()) {
    throw InvalidArgument("coloring has " + std::to_string(lambda.arcs()) + " arcs, boundary has " +
                          std::to_string(q.vertices()));
  }
  for (auto c : lambda.colors()) {
    if (c > 2) throw InvalidArgument("colors must be among the three nonzero vectors of (Z2)^2");
  }
  return q.orientable() && lambda.colors_used() == 2;
}

}  // namespace torus2::euler

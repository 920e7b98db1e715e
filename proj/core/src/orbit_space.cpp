#include "torus2/orbit_space.hpp"

#include <bit>
#include <string>

#include "torus2/errors.hpp"

namespace torus2::space {

namespace {

int popcount(std::uint64_t mask) { return std::popcount(mask); }

std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

// chi of the boundary sphere of a d-cell.
int sphere_boundary_chi(int d) { return d == 0 ? 0 : 1 + ((d - 1) % 2 == 0 ? 1 : -1); }

FacePoset polygon_like(int m, int top_chi) {
  std::vector<Face> faces;
  faces.push_back({0, 2, 0, FaceEuler{top_chi, 0}});
  for (int k = 0; k < m; ++k) faces.push_back({1 + k, 1, bit(k), FaceEuler{1, 2}});
  for (int k = 0; k < m; ++k) {
    faces.push_back({1 + m + k, 0, bit((k + m - 1) % m) | bit(k), FaceEuler{1, 0}});
  }
  return {2, std::move(faces)};
}

}  // namespace

FacePoset::FacePoset(int dim, std::vector<Face> faces) : dim_(dim), faces_(std::move(faces)) {
  if (dim_ < 1 || dim_ > 16) throw InvalidArgument("poset dimension must lie in [1, 16]");
  std::uint64_t facet_bits = 0;
  int facets = 0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    if (f.id != static_cast<int>(i)) {
      throw InvalidArgument("face ids must be dense and in order; expected " + std::to_string(i) +
                            ", got " + std::to_string(f.id));
    }
    if (f.dim < 0 || f.dim > dim_) throw InvalidArgument("face " + std::to_string(f.id) + " has bad dimension");
    if (f.dim == dim_ - 1) {
      if (popcount(f.facets) != 1) {
        throw InvalidArgument("facet face " + std::to_string(f.id) + " must list exactly itself");
      }
      if ((facet_bits & f.facets) != 0) {
        throw InvalidArgument("two facets share facet bit " + std::to_string(std::countr_zero(f.facets)));
      }
      facet_bits |= f.facets;
      ++facets;
    }
  }
  if (facets > kMaxFacets) throw CapacityError("at most 64 facets supported");
  const std::uint64_t expected = facets == 64 ? ~std::uint64_t{0} : bit(facets) - 1;
  if (facet_bits != expected) throw InvalidArgument("facet bits must be exactly 0..F-1");
  facet_face_.assign(static_cast<std::size_t>(facets), -1);
  for (const Face& f : faces_) {
    if ((f.facets & ~expected) != 0) {
      throw InvalidArgument("face " + std::to_string(f.id) + " refers to a nonexistent facet");
    }
    if (f.dim == dim_ - 1) facet_face_[static_cast<std::size_t>(std::countr_zero(f.facets))] = f.id;
  }
}

std::vector<int> FacePoset::faces_of_dim(int d) const {
  std::vector<int> out;
  for (const Face& f : faces_) {
    if (f.dim == d) out.push_back(f.id);
  }
  return out;
}

bool FacePoset::has_vertex() const {
  for (const Face& f : faces_) {
    if (f.dim == 0) return true;
  }
  return false;
}

bool FacePoset::fully_annotated() const {
  for (const Face& f : faces_) {
    if (!f.euler) return false;
  }
  return true;
}

bool FacePoset::contains(int outer, int inner) const {
  const Face& o = face(outer);
  const Face& i = face(inner);
  if (outer == inner) return true;
  if (i.dim >= o.dim) return false;
  return (o.facets & ~i.facets) == 0;
}

SurfaceWithBoundary::SurfaceWithBoundary(bool orientable, int genus, int m)
    : orientable_(orientable), genus_(genus), m_(m) {
  if (genus < 0) throw InvalidArgument("genus must be non-negative");
  if (!orientable && genus < 1) throw InvalidArgument("a non-orientable surface has genus >= 1");
  if (m < 0 || m == 1) throw InvalidArgument("a boundary circle carries 0 or at least 2 vertices");
}

FacePoset build_polygon(int m) {
  if (m < 3) throw InvalidArgument("a polygon needs at least 3 vertices");
  if (m > kMaxFacets) throw CapacityError("at most 64 facets supported");
  return polygon_like(m, 1);
}

FacePoset build_surface_poset(const SurfaceWithBoundary& q) {
  if (q.vertices() == 0) return build_vertex_free_surface(q.euler(), 1);
  if (q.vertices() > kMaxFacets) throw CapacityError("at most 64 facets supported");
  return polygon_like(q.vertices(), q.euler());
}

FacePoset build_vertex_free_surface(int chi, int circles) {
  if (circles < 1 || circles > kMaxFacets) throw InvalidArgument("circle count must lie in [1, 64]");
  std::vector<Face> faces;
  faces.push_back({0, 2, 0, FaceEuler{chi, 0}});
  for (int k = 0; k < circles; ++k) faces.push_back({1 + k, 1, bit(k), FaceEuler{0, 0}});
  return {2, std::move(faces)};
}

FacePoset build_simplex(int n) {
  if (n < 1 || n > 6) throw InvalidArgument("simplex dimension must lie in [1, 6]");
  // A face is the intersection of a proper subset S of the n+1 facets and
  // has dimension n - |S|. Listed by decreasing dimension, then by mask.
  std::vector<Face> faces;
  for (int size = 0; size <= n; ++size) {
    for (std::uint64_t mask = 0; mask < bit(n + 1); ++mask) {
      if (popcount(mask) != size) continue;
      const int d = n - size;
      faces.push_back({static_cast<int>(faces.size()), d, mask, FaceEuler{1, sphere_boundary_chi(d)}});
    }
  }
  return {n, std::move(faces)};
}

FacePoset build_prism() {
  // Zero-based facets: 0 = F1, 1 = F2, 2 = F3, 3 = F4, 4 = F5.
  constexpr int squares[3] = {0, 1, 3};
  constexpr int triangles[2] = {2, 4};
  std::vector<Face> faces;
  auto add = [&](int d, std::uint64_t mask) {
    faces.push_back({static_cast<int>(faces.size()), d, mask, FaceEuler{1, sphere_boundary_chi(d)}});
  };
  add(3, 0);
  for (int f = 0; f < 5; ++f) add(2, bit(f));
  // Vertical edges between consecutive squares, then square/triangle edges.
  for (int i = 0; i < 3; ++i) add(1, bit(squares[i]) | bit(squares[(i + 1) % 3]));
  for (int t : triangles) {
    for (int sq : squares) add(1, bit(sq) | bit(t));
  }
  for (int t : triangles) {
    for (int i = 0; i < 3; ++i) add(0, bit(squares[i]) | bit(squares[(i + 1) % 3]) | bit(t));
  }
  return {3, std::move(faces)};
}

FacePoset disjoint_union(const FacePoset& a, const FacePoset& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("disjoint union of posets of different dimensions");
  if (a.facet_count() + b.facet_count() > kMaxFacets) throw CapacityError("at most 64 facets supported");
  std::vector<Face> faces(a.faces().begin(), a.faces().end());
  const int offset = a.face_count();
  for (Face f : b.faces()) {
    f.id += offset;
    f.facets <<= a.facet_count();
    faces.push_back(f);
  }
  return {a.dim(), std::move(faces)};
}

bool check_nice(const FacePoset& p) {
  bool has_top = false;
  for (const Face& f : p.faces()) {
    if (popcount(f.facets) != p.dim() - f.dim) return false;
    has_top = has_top || f.dim == p.dim();
  }
  return has_top;
}

std::vector<int> boundary_cycle(const FacePoset& p) {
  if (p.dim() != 2) throw UnsupportedShape("boundary_cycle needs a 2-dimensional poset");
  const int facets = p.facet_count();
  const std::vector<int> vertices = p.faces_of_dim(0);
  if (vertices.empty()) throw UnsupportedShape("boundary has no vertices");

  std::vector<std::vector<int>> vertices_on(static_cast<std::size_t>(facets));
  for (int v : vertices) {
    const std::uint64_t mask = p.face(v).facets;
    if (popcount(mask) != 2) throw UnsupportedShape("vertex " + std::to_string(v) + " is not on two arcs");
    for (int f = 0; f < facets; ++f) {
      if (mask & bit(f)) vertices_on[static_cast<std::size_t>(f)].push_back(v);
    }
  }
  for (int f = 0; f < facets; ++f) {
    if (vertices_on[static_cast<std::size_t>(f)].size() != 2) {
      throw UnsupportedShape("facet " + std::to_string(f) + " is not an arc with two endpoints");
    }
  }

  auto other_facet = [&](int v, int f) { return std::countr_zero(p.face(v).facets & ~bit(f)); };

  std::vector<int> order{0};
  std::vector<bool> used_vertex(static_cast<std::size_t>(p.face_count()), false);
  const auto& first = vertices_on[0];
  int via = first[0];
  if (other_facet(first[1], 0) < other_facet(first[0], 0)) via = first[1];

  int current = 0;
  for (;;) {
    used_vertex[static_cast<std::size_t>(via)] = true;
    const int next = other_facet(via, current);
    if (next == 0) break;
    order.push_back(next);
    if (static_cast<int>(order.size()) > facets) throw UnsupportedShape("boundary is not a simple cycle");
    current = next;
    const auto& ends = vertices_on[static_cast<std::size_t>(current)];
    via = used_vertex[static_cast<std::size_t>(ends[0])] ? ends[1] : ends[0];
    if (used_vertex[static_cast<std::size_t>(via)]) throw UnsupportedShape("boundary is not a simple cycle");
  }
  if (static_cast<int>(order.size()) != facets || static_cast<int>(vertices.size()) != facets) {
    throw UnsupportedShape("boundary has more than one component");
  }
  return order;
}

}  // namespace torus2::space

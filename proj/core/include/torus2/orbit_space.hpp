#pragma once

// Finite combinatorial models of nice manifolds with corners. A face is a
// record (id, dimension, set of facets containing it); facets are numbered
// 0..F-1 and facet sets are bitmasks. Optional per-face Euler data
// (chi(F), chi(boundary F)) rides along for the Euler characteristic module.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace torus2::space {

inline constexpr int kMaxFacets = 64;

struct FaceEuler {
  int chi = 0;
  int chi_boundary = 0;

  friend bool operator==(const FaceEuler&, const FaceEuler&) = default;
};

struct Face {
  int id = 0;
  int dim = 0;
  std::uint64_t facets = 0;
  std::optional<FaceEuler> euler;
};

class FacePoset {
 public:
  // Structural validation only: ids are 0..N-1 in order, dimensions lie in
  // [0, dim], every face of dimension dim-1 is a facet with a singleton mask,
  // the facet bits are exactly 0..F-1, and no mask uses a bit >= F.
  // Niceness is not required here; see check_nice.
  FacePoset(int dim, std::vector<Face> faces);

  int dim() const noexcept { return dim_; }
  std::span<const Face> faces() const noexcept { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  int facet_count() const noexcept { return static_cast<int>(facet_face_.size()); }
  // Face id of facet k.
  int facet_face(int facet) const { return facet_face_.at(static_cast<std::size_t>(facet)); }

  std::vector<int> faces_of_dim(int d) const;
  bool has_vertex() const;
  bool fully_annotated() const;

  // True iff `inner` is a face of `outer` (reflexive).
  bool contains(int outer, int inner) const;

 private:
  int dim_;
  std::vector<Face> faces_;
  std::vector<int> facet_face_;
};

// A compact surface with exactly one boundary circle carrying m vertices.
class SurfaceWithBoundary {
 public:
  // genus is the orientable genus when orientable, otherwise the number of
  // cross-caps (>= 1). m is 0 or >= 2.
  SurfaceWithBoundary(bool orientable, int genus, int m);

  static SurfaceWithBoundary disk(int m) { return {true, 0, m}; }
  static SurfaceWithBoundary projective_plane_minus_disk(int m) { return {false, 1, m}; }
  static SurfaceWithBoundary torus_minus_disk(int m) { return {true, 1, m}; }

  bool orientable() const noexcept { return orientable_; }
  int genus() const noexcept { return genus_; }
  int boundary_components() const noexcept { return 1; }
  int vertices() const noexcept { return m_; }
  int euler() const noexcept { return orientable_ ? 1 - 2 * genus_ : 1 - genus_; }

 private:
  bool orientable_;
  int genus_;
  int m_;
};

// Edge k joins vertex k to vertex k+1; facet k is edge k. m >= 3.
FacePoset build_polygon(int m);

// The face poset of a one-boundary surface: the top face annotated with
// chi(Q), boundary arcs as in build_polygon. m = 2 gives the 2-gon; m = 0
// gives a single vertex-free boundary circle.
FacePoset build_surface_poset(const SurfaceWithBoundary& q);

// A 2-dimensional orbit space whose boundary consists of vertex-free circles
// only (e.g. the annulus S^1 x I for chi = 0, circles = 2).
FacePoset build_vertex_free_surface(int chi, int circles);

// Full face lattice of the n-simplex, 1 <= n <= 6.
FacePoset build_simplex(int n);

// Triangular prism. Facets (zero-based) 0, 1, 3 are the squares F1, F2, F4;
// facets 2, 4 are the triangles F3, F5; facets 0, 1, 2 meet at a vertex.
FacePoset build_prism();

// Side-by-side union of two posets of equal dimension.
FacePoset disjoint_union(const FacePoset& a, const FacePoset& b);

// Every face of codimension k lies in exactly k facets, and there is at
// least one top face.
bool check_nice(const FacePoset& p);

// Facets along the single boundary circle, in cyclic adjacency order
// starting at facet 0. Throws UnsupportedShape unless p is 2-dimensional and
// its facets and vertices form one cycle with at least two vertices.
std::vector<int> boundary_cycle(const FacePoset& p);

}  // namespace torus2::space

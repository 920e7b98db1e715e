#pragma once

// The small cover over an m-gon realised as a finite cell complex: the
// quotient of Q x (Z2)^2 where (x, g) ~ (x, h) iff g - h lies in the
// subgroup G_F spanned by the characteristic values of the facets through
// the face F containing x. Each face F contributes one cell per coset of G_F.

#include <cstdint>
#include <string>
#include <vector>

#include "torus2/char_functions.hpp"
#include "torus2/cycle_colorings.hpp"
#include "torus2/orbit_space.hpp"

namespace torus2::cover {

struct Cell {
  int dim = 0;
  // Face of the orbit space this cell lies over; -1 when not applicable.
  int face = -1;
  // Smallest element of the coset g + G_F, as a bitmask of (Z2)^2.
  std::uint32_t coset = 0;
  // 1-cells: {tail, head} 0-cell ids. 2-cells: edge word, 1-cell ids in
  // cyclic order.
  std::vector<int> boundary;
  // 2-cells only: +1 when the word runs along an edge from tail to head.
  std::vector<int> direction;
};

class IdentificationComplex {
 public:
  IdentificationComplex() = default;
  // Cells are ids by position. Throws InvalidArgument on dangling ids or
  // malformed boundaries.
  explicit IdentificationComplex(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  int cell_count(int dim) const;
  bool empty() const noexcept { return cells_.empty(); }

 private:
  std::vector<Cell> cells_;
};

// Colors 0, 1, 2 stand for e1, e2, e1+e2. Throws InvalidArgument unless
// m >= 3, lambda has m arcs and uses three colors.
IdentificationComplex build_small_cover(int m, const cycles::CycleColoring& lambda);

IdentificationComplex disjoint_union(const IdentificationComplex& a, const IdentificationComplex& b);

// #0-cells - #1-cells + #2-cells.
long long euler_of_complex(const IdentificationComplex& c);

// Components of the complex (cells joined through boundaries); 0 if empty.
int connected_components(const IdentificationComplex& c);

// Every 1-cell appears exactly twice among the 2-cell edge words and the
// link of every 0-cell is a single circle.
bool is_closed_surface(const IdentificationComplex& c);

// Edges with exactly two 2-cell incidences.
bool every_edge_doubly_incident(const IdentificationComplex& c);

// Tries to orient all 2-cells so that each edge is traversed once in each
// direction. Requires a closed complex.
bool orientable_by_propagation(const IdentificationComplex& c);

struct SurfaceType {
  long long euler = 0;
  bool orientable = false;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

// (chi, orientable) with orientability decided by the two-colors criterion
// and cross-checked by propagation; ConsistencyError if they disagree.
SurfaceType surface_type(const IdentificationComplex& c, const cycles::CycleColoring& lambda);

// For each face id, the number of cells over it: 2^n / |G_F|.
std::vector<int> orbit_census(const space::FacePoset& p, const charfn::CharacteristicFunction& lambda);

// One line per cell: "dim id boundary-ids"; a 2-cell lists its edge word
// with '-' on edges run from head to tail.
std::string format_complex(const IdentificationComplex& c);

}  // namespace torus2::cover

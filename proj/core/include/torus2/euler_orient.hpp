#pragma once

#include <optional>
#include <vector>

#include "torus2/cycle_colorings.hpp"
#include "torus2/orbit_space.hpp"

namespace torus2::euler {

// Per-face (chi(F), chi(boundary F)), indexed by face id.
using FaceEulerData = std::vector<std::optional<space::FaceEuler>>;

// The annotations carried by the poset itself.
FaceEulerData annotations(const space::FacePoset& p);

// sum_F 2^{dim F} (chi(F) - chi(boundary F)). Throws InvalidArgument when a
// face is unannotated or the data has the wrong length.
long long euler_total(const space::FacePoset& p, const FaceEulerData& data);
long long euler_total(const space::FacePoset& p);

// 4 chi(Q) - m.
long long euler_2d(const space::SurfaceWithBoundary& q);

// Orientability of the 2-manifold over q whose characteristic function is
// the boundary coloring `lambda` (three colors = the nonzero vectors of
// (Z2)^2): q orientable and exactly two colors on the vertexed boundary.
// Throws InvalidArgument when lambda does not color q's boundary with
// colors from {0, 1, 2}.
bool is_orientable(const space::SurfaceWithBoundary& q, const cycles::CycleColoring& lambda);

}  // namespace torus2::euler

#pragma once

// Counting the three classifications of locally standard 2-torus manifolds
// over an orbit space Q: up to equivalence, up to equivariant homeomorphism
// and up to weak equivariant homeomorphism. Principal bundles over Q are
// modelled by H^1(Q; (Z2)^n) = n copies of H^1(Q; Z2) = (Z2)^r.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "torus2/bigint.hpp"
#include "torus2/char_functions.hpp"
#include "torus2/gf2.hpp"
#include "torus2/orbit_space.hpp"

namespace torus2::classify {

class H1Model {
 public:
  // `aut_image` is the image of Aut(Q) in GL(r, Z2). It must be closed under
  // products and inverses (ConsistencyError otherwise). For r = 0 it must be
  // empty and stands for the trivial group.
  H1Model(int r, int n, std::vector<gf2::Matrix> aut_image);

  // Closure of the generators (identity included).
  static H1Model from_generators(int r, int n, std::span<const gf2::Matrix> generators);

  // Disk: r = 0. RP^2 minus a disk: r = 1, trivial action. Torus minus a
  // disk: r = 2 with the full GL(2, Z2).
  static H1Model disk(int n = 2);
  static H1Model projective_plane_minus_disk(int n = 2);
  static H1Model torus_minus_disk(int n = 2);
  // "disk", "rp2" or "torus".
  static H1Model preset(std::string_view name, int n = 2);

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  // 2^{r n}; elements are codes whose bits [j r, (j+1) r) hold component j.
  std::size_t element_count() const noexcept { return std::size_t{1} << (r_ * n_); }
  std::span<const gf2::Matrix> aut_image() const noexcept { return aut_image_; }
  std::size_t aut_order() const noexcept { return aut_image_.empty() ? 1 : aut_image_.size(); }

  // Aut(Q) element `a` applied to every component.
  std::uint32_t apply_aut(std::size_t a, std::uint32_t x) const;
  // The coefficient automorphism sigma of (Z2)^n.
  std::uint32_t apply_gl(const gf2::Matrix& sigma, std::uint32_t x) const;

 private:
  int r_;
  int n_;
  std::vector<gf2::Matrix> aut_image_;
};

struct ClassificationReport {
  std::size_t lambda_count = 0;
  std::size_t h1_count = 0;
  std::size_t equivalence_count = 0;
  std::size_t equivariant_count = 0;
  std::size_t weak_count = 0;
  bool free = false;
  bool consistent = false;
};

// |GL(n,Z2) \ (H^1 x Lambda)|. When the action is free the count must equal
// |H^1| |Lambda| / |GL(n,Z2)|.
std::size_t count_equivalence_classes(const H1Model& h1, std::span<const charfn::CharacteristicFunction> lambdas);

// h(Q) B(m) for a one-boundary surface with m >= 2 vertices.
BigInt count_equivariant_classes_surface(const space::SurfaceWithBoundary& q, const BigInt& h_of_q);

// h(Q) = |H^1(Q; (Z2)^2) / Aut(Q)|. Requires n = 2.
std::size_t compute_h(const H1Model& h1);

// |Lambda(Q) / Aut(F(Q))|.
std::size_t count_equivariant_classes_small_cover(const space::FacePoset& p, int n,
                                                  const charfn::Budget& budget = {});

// |(H^1 x Lambda) / Aut(Q)| with Aut(Q) acting as aut_image x Aut(F(Q)).
std::size_t count_equivariant_classes(const H1Model& h1, const space::FacePoset& p, int n,
                                      const charfn::Budget& budget = {});

// |GL(n,Z2) \ (H^1 x Lambda) / Aut(Q)| with Aut(Q) as above.
std::size_t count_weak_classes(const H1Model& h1, const space::FacePoset& p, int n,
                               const charfn::Budget& budget = {});

ClassificationReport classify(const H1Model& h1, const space::FacePoset& p, int n,
                              const charfn::Budget& budget = {});

}  // namespace torus2::classify

#pragma once

// Proper colorings of the circle S(m) with m arcs, the dihedral and
// color-permutation actions on them, and the closed-form counts A, B, C
// together with a brute-force Burnside oracle.
//
// Arc k joins vertex k to vertex k+1 (mod m). The dihedral group D_m is
// generated by the rotation a (vertex j -> j+1) and the reflection b
// (vertex j -> -j); reflection k below is a^k b, i.e. vertex j -> k-j,
// which sends arc i to arc k-1-i.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "torus2/bigint.hpp"

namespace torus2::cycles {

class CycleColoring {
 public:
  // Throws InvalidArgument unless m >= 2, 2 <= s <= 255, every color is in
  // [0, s) and adjacent arcs (cyclically) differ.
  CycleColoring(int s, std::vector<std::uint8_t> colors);

  int arcs() const noexcept { return static_cast<int>(colors_.size()); }
  int color_count() const noexcept { return s_; }
  std::span<const std::uint8_t> colors() const noexcept { return colors_; }
  std::uint8_t operator[](int arc) const { return colors_[static_cast<std::size_t>(arc)]; }

  // Number of distinct colors actually used.
  int colors_used() const;

  // Base-s digits with arc 0 most significant; orders like the sequences.
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const CycleColoring&, const CycleColoring&) = default;
  friend auto operator<=>(const CycleColoring&, const CycleColoring&) = default;

 private:
  int s_;
  std::vector<std::uint8_t> colors_;
};

enum class DihedralKind { rotation, reflection };

class DihedralElement {
 public:
  static DihedralElement rotation(int m, int k);
  static DihedralElement reflection(int m, int k);

  int order_parameter() const noexcept { return m_; }
  DihedralKind kind() const noexcept { return kind_; }
  int index() const noexcept { return k_; }

  int arc_image(int arc) const;
  int vertex_image(int vertex) const;

  // (*this)(other(x)).
  DihedralElement after(const DihedralElement& other) const;
  DihedralElement inverse() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  DihedralElement(int m, DihedralKind kind, int k);

  int m_;
  DihedralKind kind_;
  int k_;
};

// The 2m elements: rotations 0..m-1, then reflections 0..m-1.
std::vector<DihedralElement> dihedral_group(int m);

// A bijection of [0, s) given by its image table.
using ColorPermutation = std::vector<std::uint8_t>;

// All s! permutations in lexicographic order of image tables.
std::vector<ColorPermutation> color_permutations(int s);

struct EnumerationBudget {
  // Upper bound on s^m, the size of the raw sequence space; 3^22 by default.
  std::uint64_t max_sequences = 31381059609ULL;
};

// All proper colorings in lexicographic order. Throws CapacityError when s^m
// exceeds the budget.
std::vector<CycleColoring> enumerate_colorings(int m, int s, const EnumerationBudget& budget = {});

// A_s(m) = (s-1)^m + (-1)^m (s-1).
BigInt count_closed_form(int m, int s = 3);

// (g.c)[g(i)] = c[i].
CycleColoring act_dihedral(const DihedralElement& g, const CycleColoring& c);

// (p.c)[i] = p[c[i]].
CycleColoring act_color_symmetry(std::span<const std::uint8_t> p, const CycleColoring& c);

// B(m) = |Lambda(m) / D_m|.
BigInt count_orbits_closed_form_B(int m);

// |Lambda_s(m) / D_m|.
BigInt count_orbits_closed_form_B_scolor(int m, int s);

// C(m) = |GL(2,Z2) \ Lambda(m) / D_m|. Each partial quotient is checked for
// exact divisibility.
BigInt count_double_cosets_closed_form_C(int m);

// phi(n) by trial-division factorization; phi(1) = 1.
std::uint64_t euler_totient(std::uint64_t n);

using ColoringAction = std::function<CycleColoring(const CycleColoring&)>;

std::vector<ColoringAction> dihedral_actions(int m);

// c -> p.(g.c) over D_m x Sym(s): 2m * s! actions (12m for s = 3).
std::vector<ColoringAction> combined_actions(int m, int s = 3);

// Orbit count of `group` acting on `elements` (which must be pairwise
// distinct). Counted by Burnside's fixed-point average and independently by a
// union-find partition; any disagreement, a non-integral average or an action
// leaving the set raises ConsistencyError.
std::size_t burnside_orbit_count(std::span<const CycleColoring> elements,
                                 std::span<const ColoringAction> group);

}  // namespace torus2::cycles

#pragma once

// Characteristic functions on a face poset: facet -> nonzero vector of
// (Z2)^n with linearly independent values at every face. The poset is passed
// alongside; a CharacteristicFunction carries only its values.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "torus2/gf2.hpp"
#include "torus2/orbit_space.hpp"
#include "torus2/orbits.hpp"

namespace torus2::charfn {

class CharacteristicFunction {
 public:
  // Values indexed by facet. Throws InvalidArgument on a zero value or mixed
  // ranks; independence is checked by is_valid against a poset.
  explicit CharacteristicFunction(std::vector<gf2::Vector> values);

  int rank() const noexcept { return values_.front().rank(); }
  int facet_count() const noexcept { return static_cast<int>(values_.size()); }
  const gf2::Vector& operator[](int facet) const { return values_[static_cast<std::size_t>(facet)]; }
  std::span<const gf2::Vector> values() const noexcept { return values_; }

  // Facet 0 in the most significant digit, base 2^n.
  std::uint64_t code() const;

  friend bool operator==(const CharacteristicFunction&, const CharacteristicFunction&) = default;
  friend auto operator<=>(const CharacteristicFunction&, const CharacteristicFunction&) = default;

 private:
  std::vector<gf2::Vector> values_;
};

// A permutation of facet ids; h[f] is the image of facet f.
class FacetAutomorphism {
 public:
  // Throws InvalidArgument unless `image` is a permutation of 0..F-1.
  explicit FacetAutomorphism(std::vector<int> image);

  static FacetAutomorphism identity(int facets);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int facet) const { return image_[static_cast<std::size_t>(facet)]; }
  std::span<const int> image() const noexcept { return image_; }

  FacetAutomorphism inverse() const;
  // (*this)(other(f)).
  FacetAutomorphism after(const FacetAutomorphism& other) const;

  friend bool operator==(const FacetAutomorphism&, const FacetAutomorphism&) = default;
  friend auto operator<=>(const FacetAutomorphism&, const FacetAutomorphism&) = default;

 private:
  std::vector<int> image_;
};

struct Budget {
  int max_facets = 24;
  std::size_t max_functions = 20'000'000;
  // Brute-force automorphism search is attempted up to this many facets.
  int max_brute_force_facets = 10;
};

// Linear independence at every face.
bool is_valid(const space::FacePoset& p, const CharacteristicFunction& lambda);

// All characteristic functions, lexicographic by (value of facet 0, value
// of facet 1, ...). Backtracks over facets in id order and checks each face as
// soon as its last facet is assigned. An empty result is valid.
std::vector<CharacteristicFunction> enumerate_char_functions(const space::FacePoset& p, int n,
                                                             const Budget& budget = {});

// sigma o lambda. Throws InvalidArgument for a singular sigma.
CharacteristicFunction gl_act(const gf2::Matrix& sigma, const CharacteristicFunction& lambda);

// lambda o h.
CharacteristicFunction aut_act(const FacetAutomorphism& h, const CharacteristicFunction& lambda);

// True iff h maps the facet set of every face onto the facet set of a face of
// the same dimension (with matching multiplicities).
bool is_automorphism(const space::FacePoset& p, const FacetAutomorphism& h);

// All facet permutations preserving the poset, sorted. One-boundary-cycle
// 2-dimensional posets use the dihedral group of the cycle; other posets are
// searched by backtracking within the budget.
std::vector<FacetAutomorphism> facet_automorphism_group(const space::FacePoset& p, const Budget& budget = {});

// Same as above but always by backtracking (the cross-check for the dihedral
// shortcut).
std::vector<FacetAutomorphism> facet_automorphisms_brute_force(const space::FacePoset& p,
                                                               const Budget& budget = {});

struct GlOrbitCount {
  std::size_t orbits = 0;
  bool free = false;
};

// GL(n,Z2)-orbits on Lambda(Q). Certified by partition and Burnside; when p
// has a vertex the action must be free and |Lambda| = orbits * |GL(n,Z2)|,
// otherwise ConsistencyError.
GlOrbitCount count_gl_orbits(const space::FacePoset& p, int n, const Budget& budget = {});
GlOrbitCount count_gl_orbits(const space::FacePoset& p, std::span<const CharacteristicFunction> lambdas);

// |GL(n,Z2) \ Lambda(Q) / Aut(F(Q))|.
std::size_t count_double_cosets(const space::FacePoset& p, int n, const Budget& budget = {});

// Index lookup for a sorted, duplicate-free set of characteristic functions.
class FunctionIndex {
 public:
  explicit FunctionIndex(std::span<const CharacteristicFunction> lambdas);

  std::size_t size() const noexcept { return codes_.size(); }
  // size() when absent.
  std::size_t find(const CharacteristicFunction& lambda) const;

 private:
  std::vector<std::pair<std::uint64_t, std::size_t>> codes_;
};

// Actions on Lambda (indexed by `lambdas`) of GL(n,Z2) followed by the given
// automorphisms: element g < |GL| is a matrix, g >= |GL| an automorphism.
// With `product` set, the group is GL x Aut (|GL| * |Aut| elements).
IndexedAction lambda_action(std::span<const CharacteristicFunction> lambdas, const FunctionIndex& index,
                            std::span<const gf2::Matrix> gl, std::span<const FacetAutomorphism> auts,
                            bool product);

// "facet:bitmask" comma list, e.g. "0:1,1:2,2:4".
std::string format_char_function(const CharacteristicFunction& lambda);
CharacteristicFunction parse_char_function(const std::string& text, int n);

}  // namespace torus2::charfn

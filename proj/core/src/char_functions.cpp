#include "torus2/char_functions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "torus2/errors.hpp"

namespace torus2::charfn {

namespace {

std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

// Faces grouped by the highest facet in their mask; a face can be checked
// once that facet has a value.
std::vector<std::vector<std::uint64_t>> masks_by_last_facet(const space::FacePoset& p) {
  std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(p.facet_count()));
  for (const auto& f : p.faces()) {
    if (std::popcount(f.facets) < 2) continue;
    const int last = 63 - std::countl_zero(f.facets);
    auto& bucket = out[static_cast<std::size_t>(last)];
    if (std::find(bucket.begin(), bucket.end(), f.facets) == bucket.end()) bucket.push_back(f.facets);
  }
  return out;
}

bool independent_at(std::uint64_t mask, std::span<const gf2::Vector> values) {
  std::vector<gf2::Vector> at;
  for (int f = 0; mask != 0; ++f, mask >>= 1) {
    if (mask & 1u) at.push_back(values[static_cast<std::size_t>(f)]);
  }
  return gf2::is_independent(at);
}

using FaceKey = std::pair<int, std::uint64_t>;

std::map<FaceKey, int> face_multiset(const space::FacePoset& p) {
  std::map<FaceKey, int> out;
  for (const auto& f : p.faces()) ++out[{f.dim, f.facets}];
  return out;
}

std::uint64_t map_mask(std::uint64_t mask, std::span<const int> image) {
  std::uint64_t out = 0;
  for (int f = 0; mask != 0; ++f, mask >>= 1) {
    if (mask & 1u) out |= bit(image[static_cast<std::size_t>(f)]);
  }
  return out;
}

std::vector<FacetAutomorphism> sorted_unique(std::vector<FacetAutomorphism> group) {
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

}  // namespace

CharacteristicFunction::CharacteristicFunction(std::vector<gf2::Vector> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("a characteristic function needs at least one facet");
  const int n = values_.front().rank();
  for (const auto& v : values_) {
    if (v.rank() != n) throw DimensionMismatch("characteristic function values have mixed ranks");
    if (v.is_zero()) throw InvalidArgument("characteristic function takes the zero vector");
  }
}

std::uint64_t CharacteristicFunction::code() const {
  if (facet_count() * rank() > 64) throw CapacityError("characteristic function code exceeds 64 bits");
  std::uint64_t out = 0;
  for (const auto& v : values_) out = (out << rank()) | v.bits();
  return out;
}

FacetAutomorphism::FacetAutomorphism(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || hit[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("facet map is not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

FacetAutomorphism FacetAutomorphism::identity(int facets) {
  std::vector<int> image(static_cast<std::size_t>(facets));
  std::iota(image.begin(), image.end(), 0);
  return FacetAutomorphism(std::move(image));
}

FacetAutomorphism FacetAutomorphism::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t f = 0; f < image_.size(); ++f) inv[static_cast<std::size_t>(image_[f])] = static_cast<int>(f);
  return FacetAutomorphism(std::move(inv));
}

FacetAutomorphism FacetAutomorphism::after(const FacetAutomorphism& other) const {
  if (other.size() != size()) throw InvalidArgument("composing facet maps of different sizes");
  std::vector<int> out(image_.size());
  for (std::size_t f = 0; f < image_.size(); ++f) out[f] = (*this)(other(static_cast<int>(f)));
  return FacetAutomorphism(std::move(out));
}

bool is_valid(const space::FacePoset& p, const CharacteristicFunction& lambda) {
  if (lambda.facet_count() != p.facet_count()) return false;
  for (const auto& f : p.faces()) {
    if (!independent_at(f.facets, lambda.values())) return false;
  }
  return true;
}

std::vector<CharacteristicFunction> enumerate_char_functions(const space::FacePoset& p, int n,
                                                             const Budget& budget) {
  if (n != p.dim()) {
    throw InvalidArgument("rank " + std::to_string(n) + " does not match poset dimension " +
                          std::to_string(p.dim()));
  }
  const int facets = p.facet_count();
  if (facets == 0) return {};
  if (facets > budget.max_facets || facets * n > 64) {
    throw CapacityError("poset has " + std::to_string(facets) + " facets; enumeration budget is " +
                        std::to_string(budget.max_facets));
  }

  const auto checks = masks_by_last_facet(p);
  const std::uint32_t limit = 1u << n;
  std::vector<gf2::Vector> values(static_cast<std::size_t>(facets), gf2::Vector(n, 1));
  std::vector<CharacteristicFunction> out;

  auto extend = [&](auto& self, int f) -> void {
    if (f == facets) {
      if (out.size() >= budget.max_functions) {
        throw CapacityError("more than " + std::to_string(budget.max_functions) + " characteristic functions");
      }
      out.emplace_back(values);
      return;
    }
    for (std::uint32_t v = 1; v < limit; ++v) {
      values[static_cast<std::size_t>(f)] = gf2::Vector(n, v);
      bool ok = true;
      for (auto mask : checks[static_cast<std::size_t>(f)]) {
        if (!independent_at(mask, values)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, f + 1);
    }
  };
  extend(extend, 0);
  return out;
}

CharacteristicFunction gl_act(const gf2::Matrix& sigma, const CharacteristicFunction& lambda) {
  if (sigma.rank() != lambda.rank()) throw DimensionMismatch("gl_act: matrix and function ranks differ");
  if (!sigma.is_invertible()) throw InvalidArgument("gl_act: matrix is singular");
  std::vector<gf2::Vector> out;
  out.reserve(lambda.values().size());
  for (const auto& v : lambda.values()) out.push_back(gf2::apply(sigma, v));
  return CharacteristicFunction(std::move(out));
}

CharacteristicFunction aut_act(const FacetAutomorphism& h, const CharacteristicFunction& lambda) {
  if (h.size() != lambda.facet_count()) throw InvalidArgument("aut_act: facet map has the wrong size");
  std::vector<gf2::Vector> out;
  out.reserve(lambda.values().size());
  for (int f = 0; f < lambda.facet_count(); ++f) out.push_back(lambda[h(f)]);
  return CharacteristicFunction(std::move(out));
}

bool is_automorphism(const space::FacePoset& p, const FacetAutomorphism& h) {
  if (h.size() != p.facet_count()) return false;
  const auto original = face_multiset(p);
  std::map<FaceKey, int> mapped;
  for (const auto& f : p.faces()) ++mapped[{f.dim, map_mask(f.facets, h.image())}];
  return mapped == original;
}

std::vector<FacetAutomorphism> facet_automorphisms_brute_force(const space::FacePoset& p, const Budget& budget) {
  const int facets = p.facet_count();
  if (facets > budget.max_brute_force_facets) {
    throw CapacityError("automorphism search over " + std::to_string(facets) + " facets exceeds the budget of " +
                        std::to_string(budget.max_brute_force_facets));
  }
  const auto keys = face_multiset(p);
  std::vector<std::vector<FaceKey>> checks(static_cast<std::size_t>(std::max(facets, 1)));
  for (const auto& [key, count] : keys) {
    if (key.second == 0) continue;
    checks[static_cast<std::size_t>(63 - std::countl_zero(key.second))].push_back(key);
  }

  std::vector<FacetAutomorphism> out;
  std::vector<int> image(static_cast<std::size_t>(facets), -1);
  std::vector<bool> taken(static_cast<std::size_t>(facets), false);
  auto extend = [&](auto& self, int f) -> void {
    if (f == facets) {
      FacetAutomorphism h(image);
      if (is_automorphism(p, h)) out.push_back(std::move(h));
      return;
    }
    for (int target = 0; target < facets; ++target) {
      if (taken[static_cast<std::size_t>(target)]) continue;
      image[static_cast<std::size_t>(f)] = target;
      bool ok = true;
      for (const auto& [d, mask] : checks[static_cast<std::size_t>(f)]) {
        if (!keys.contains({d, map_mask(mask, image)})) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      taken[static_cast<std::size_t>(target)] = true;
      self(self, f + 1);
      taken[static_cast<std::size_t>(target)] = false;
    }
  };
  extend(extend, 0);
  return sorted_unique(std::move(out));
}

std::vector<FacetAutomorphism> facet_automorphism_group(const space::FacePoset& p, const Budget& budget) {
  if (p.dim() == 2 && p.has_vertex()) {
    std::vector<int> cycle;
    try {
      cycle = space::boundary_cycle(p);
    } catch (const UnsupportedShape&) {
      return facet_automorphisms_brute_force(p, budget);
    }
    const int m = static_cast<int>(cycle.size());
    std::vector<FacetAutomorphism> out;
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (int k = 0; k < m; ++k) {
        std::vector<int> image(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
          const int j = reflect ? ((k - i) % m + m) % m : (i + k) % m;
          image[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = cycle[static_cast<std::size_t>(j)];
        }
        FacetAutomorphism h(std::move(image));
        if (is_automorphism(p, h)) out.push_back(std::move(h));
      }
    }
    return sorted_unique(std::move(out));
  }
  return facet_automorphisms_brute_force(p, budget);
}

FunctionIndex::FunctionIndex(std::span<const CharacteristicFunction> lambdas) {
  codes_.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) codes_.emplace_back(lambdas[i].code(), i);
  std::sort(codes_.begin(), codes_.end());
  for (std::size_t i = 1; i < codes_.size(); ++i) {
    if (codes_[i].first == codes_[i - 1].first) throw InvalidArgument("duplicate characteristic function");
  }
}

std::size_t FunctionIndex::find(const CharacteristicFunction& lambda) const {
  const std::uint64_t key = lambda.code();
  auto it = std::lower_bound(codes_.begin(), codes_.end(), std::make_pair(key, std::size_t{0}));
  if (it == codes_.end() || it->first != key) return codes_.size();
  return it->second;
}

IndexedAction lambda_action(std::span<const CharacteristicFunction> lambdas, const FunctionIndex& index,
                            std::span<const gf2::Matrix> gl, std::span<const FacetAutomorphism> auts,
                            bool product) {
  IndexedAction action;
  action.set_size = lambdas.size();
  if (product) {
    const std::size_t a = std::max<std::size_t>(auts.size(), 1);
    action.group_size = std::max<std::size_t>(gl.size(), 1) * a;
    action.image = [=, &index](std::size_t g, std::size_t x) {
      CharacteristicFunction y = lambdas[x];
      if (!gl.empty()) y = gl_act(gl[g / a], y);
      if (!auts.empty()) y = aut_act(auts[g % a], y);
      return index.find(y);
    };
  } else {
    action.group_size = gl.size() + auts.size();
    action.image = [=, &index](std::size_t g, std::size_t x) {
      if (g < gl.size()) return index.find(gl_act(gl[g], lambdas[x]));
      return index.find(aut_act(auts[g - gl.size()], lambdas[x]));
    };
  }
  return action;
}

GlOrbitCount count_gl_orbits(const space::FacePoset& p, std::span<const CharacteristicFunction> lambdas) {
  if (lambdas.empty()) return {0, true};
  const int n = lambdas.front().rank();
  const auto gl = gf2::enumerate_gl(n);
  const FunctionIndex index(lambdas);
  const auto summary = certified_orbit_count(lambda_action(lambdas, index, gl, {}, true));
  if (p.has_vertex()) {
    if (!summary.free) throw ConsistencyError("GL action has a nontrivial stabilizer on a poset with a vertex");
    if (summary.orbits * gl.size() != lambdas.size()) {
      throw ConsistencyError("|Lambda| differs from orbits * |GL(n,Z2)|");
    }
  }
  return {summary.orbits, summary.free};
}

GlOrbitCount count_gl_orbits(const space::FacePoset& p, int n, const Budget& budget) {
  const auto lambdas = enumerate_char_functions(p, n, budget);
  return count_gl_orbits(p, lambdas);
}

std::size_t count_double_cosets(const space::FacePoset& p, int n, const Budget& budget) {
  const auto lambdas = enumerate_char_functions(p, n, budget);
  if (lambdas.empty()) return 0;
  const auto gl = gf2::enumerate_gl(n);
  const auto auts = facet_automorphism_group(p, budget);
  const FunctionIndex index(lambdas);
  const std::size_t by_generators = partition_orbit_count(lambda_action(lambdas, index, gl, auts, false));
  const std::size_t certified = certified_orbit_count(lambda_action(lambdas, index, gl, auts, true)).orbits;
  if (by_generators != certified) {
    throw ConsistencyError("double coset count depends on the generating set");
  }
  return certified;
}

std::string format_char_function(const CharacteristicFunction& lambda) {
  std::string out;
  for (int f = 0; f < lambda.facet_count(); ++f) {
    if (f != 0) out += ',';
    out += std::to_string(f) + ':' + std::to_string(lambda[f].bits());
  }
  return out;
}

CharacteristicFunction parse_char_function(const std::string& text, int n) {
  std::map<int, std::uint32_t> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("expected facet:bitmask, got '" + item + "'", 0);
    int facet = 0;
    unsigned long bits = 0;
    try {
      std::size_t used = 0;
      facet = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
      const std::string rhs = item.substr(colon + 1);
      bits = std::stoul(rhs, &used);
      if (used != rhs.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("malformed entry '" + item + "'", 0);
    }
    if (!entries.emplace(facet, static_cast<std::uint32_t>(bits)).second) {
      throw ParseError("facet " + std::to_string(facet) + " listed twice", 0);
    }
  }
  std::vector<gf2::Vector> values;
  int expected = 0;
  for (const auto& [facet, bits] : entries) {
    if (facet != expected++) throw ParseError("facet ids must be 0..F-1", 0);
    values.emplace_back(n, bits);
  }
  return CharacteristicFunction(std::move(values));
}

}  // namespace torus2::charfn

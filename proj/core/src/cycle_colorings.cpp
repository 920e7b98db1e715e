#include "torus2/cycle_colorings.hpp"

#include <algorithm>
#include <numeric>

#include "torus2/errors.hpp"
#include "torus2/orbits.hpp"

namespace torus2::cycles {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

void require_arcs(int m) {
  if (m < 2) throw InvalidArgument("a circle needs at least 2 arcs, got " + std::to_string(m));
}

void require_colors(int s) {
  if (s < 2 || s > 255) throw InvalidArgument("color count must lie in [2, 255], got " + std::to_string(s));
}

// s^m, or nullopt-like sentinel 0 on overflow of 64 bits.
std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > UINT64_MAX / base) return 0;
    out *= base;
  }
  return out;
}

// A_s(q) for any q >= 0: the number of colorings of a path of q arcs whose
// end arcs differ (q >= 2), with A_s(1) = 0 and A_s(0) = s.
BigInt path_closed_form(int q, int s) {
  BigInt out = boost::multiprecision::pow(BigInt(s - 1), static_cast<unsigned>(q));
  if (q % 2 == 0) {
    out += s - 1;
  } else {
    out -= s - 1;
  }
  return out;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; static_cast<long long>(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d != m / d) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Burnside over D_m acting on Lambda_s(m). Rotation terms: a rotation by k
// fixes exactly the colorings periodic with period gcd(k, m). Reflection
// terms: only edge-midpoint axes (m even, k odd) fix colorings.
BigInt dihedral_burnside_closed_form(int m, int s) {
  require_arcs(m);
  require_colors(s);
  BigInt total = 0;
  for (int d : divisors(m)) {
    if (d < 2) continue;
    total += BigInt(euler_totient(static_cast<std::uint64_t>(m / d))) * path_closed_form(d, s);
  }
  if (m % 2 == 0) {
    total += BigInt(s) * boost::multiprecision::pow(BigInt(s - 1), static_cast<unsigned>(m / 2)) * (m / 2);
  }
  if (total % (2 * m) != 0) {
    throw ConsistencyError("dihedral fixed-point sum not divisible by 2m at m=" + std::to_string(m));
  }
  return total / (2 * m);
}

}  // namespace

CycleColoring::CycleColoring(int s, std::vector<std::uint8_t> colors) : s_(s), colors_(std::move(colors)) {
  require_colors(s);
  const int m = arcs();
  require_arcs(m);
  for (int k = 0; k < m; ++k) {
    if (colors_[static_cast<std::size_t>(k)] >= s) {
      throw InvalidArgument("color index out of range at arc " + std::to_string(k));
    }
    if (colors_[static_cast<std::size_t>(k)] == colors_[static_cast<std::size_t>((k + 1) % m)]) {
      throw InvalidArgument("arcs " + std::to_string(k) + " and " + std::to_string((k + 1) % m) +
                            " share a color");
    }
  }
}

int CycleColoring::colors_used() const {
  std::vector<bool> seen(static_cast<std::size_t>(s_), false);
  int used = 0;
  for (auto c : colors_) {
    if (!seen[c]) {
      seen[c] = true;
      ++used;
    }
  }
  return used;
}

std::uint64_t CycleColoring::code() const {
  std::uint64_t out = 0;
  for (auto c : colors_) out = out * static_cast<std::uint64_t>(s_) + c;
  return out;
}

std::string CycleColoring::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < colors_.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(colors_[k]);
  }
  return out;
}

DihedralElement::DihedralElement(int m, DihedralKind kind, int k) : m_(m), kind_(kind), k_(mod(k, m)) {
  require_arcs(m);
}

DihedralElement DihedralElement::rotation(int m, int k) { return {m, DihedralKind::rotation, k}; }

DihedralElement DihedralElement::reflection(int m, int k) { return {m, DihedralKind::reflection, k}; }

int DihedralElement::arc_image(int arc) const {
  return kind_ == DihedralKind::rotation ? mod(arc + k_, m_) : mod(k_ - 1 - arc, m_);
}

int DihedralElement::vertex_image(int vertex) const {
  return kind_ == DihedralKind::rotation ? mod(vertex + k_, m_) : mod(k_ - vertex, m_);
}

DihedralElement DihedralElement::after(const DihedralElement& other) const {
  if (other.m_ != m_) throw InvalidArgument("composing dihedral elements of different orders");
  const int image0 = arc_image(other.arc_image(0));
  if (kind_ == other.kind_) return rotation(m_, image0);
  return reflection(m_, image0 + 1);
}

DihedralElement DihedralElement::inverse() const {
  return kind_ == DihedralKind::rotation ? rotation(m_, -k_) : *this;
}

std::vector<DihedralElement> dihedral_group(int m) {
  require_arcs(m);
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * m));
  for (int k = 0; k < m; ++k) out.push_back(DihedralElement::rotation(m, k));
  for (int k = 0; k < m; ++k) out.push_back(DihedralElement::reflection(m, k));
  return out;
}

std::vector<ColorPermutation> color_permutations(int s) {
  require_colors(s);
  if (s > 8) throw CapacityError("color permutations limited to s <= 8");
  ColorPermutation p(static_cast<std::size_t>(s));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<ColorPermutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<CycleColoring> enumerate_colorings(int m, int s, const EnumerationBudget& budget) {
  require_arcs(m);
  require_colors(s);
  const std::uint64_t space = checked_power(static_cast<std::uint64_t>(s), m);
  if (space == 0 || space > budget.max_sequences) {
    throw CapacityError("enumerating " + std::to_string(s) + "^" + std::to_string(m) +
                        " sequences exceeds the budget of " + std::to_string(budget.max_sequences));
  }

  std::vector<CycleColoring> out;
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(m));
  auto extend = [&](auto& self, int arc) -> void {
    if (arc == m) {
      out.emplace_back(s, colors);
      return;
    }
    for (int c = 0; c < s; ++c) {
      if (arc > 0 && colors[static_cast<std::size_t>(arc - 1)] == c) continue;
      if (arc == m - 1 && colors[0] == c) continue;
      colors[static_cast<std::size_t>(arc)] = static_cast<std::uint8_t>(c);
      self(self, arc + 1);
    }
  };
  extend(extend, 0);
  return out;
}

BigInt count_closed_form(int m, int s) {
  require_arcs(m);
  require_colors(s);
  return path_closed_form(m, s);
}

CycleColoring act_dihedral(const DihedralElement& g, const CycleColoring& c) {
  if (g.order_parameter() != c.arcs()) {
    throw InvalidArgument("dihedral element of D_" + std::to_string(g.order_parameter()) +
                          " applied to a coloring with " + std::to_string(c.arcs()) + " arcs");
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(c.arcs()));
  for (int i = 0; i < c.arcs(); ++i) out[static_cast<std::size_t>(g.arc_image(i))] = c[i];
  return {c.color_count(), std::move(out)};
}

CycleColoring act_color_symmetry(std::span<const std::uint8_t> p, const CycleColoring& c) {
  const auto s = static_cast<std::size_t>(c.color_count());
  if (p.size() != s) throw InvalidArgument("color permutation has the wrong length");
  std::vector<bool> hit(s, false);
  for (auto v : p) {
    if (v >= s || hit[v]) throw InvalidArgument("color map is not a bijection");
    hit[v] = true;
  }
  std::vector<std::uint8_t> out(c.colors().begin(), c.colors().end());
  for (auto& v : out) v = p[v];
  return {c.color_count(), std::move(out)};
}

BigInt count_orbits_closed_form_B(int m) { return dihedral_burnside_closed_form(m, 3); }

BigInt count_orbits_closed_form_B_scolor(int m, int s) { return dihedral_burnside_closed_form(m, s); }

BigInt count_double_cosets_closed_form_C(int m) {
  require_arcs(m);
  // Number of sigma in GL(2,Z2) = Sym(3) with sigma^{m/d} = 1, indexed by
  // gcd(m/d, 6), split by whether the end arcs of a fundamental block differ.
  auto alpha = [](int g) { return g == 1 ? 1 : g == 2 ? 3 : g == 3 ? 2 : 4; };
  auto beta = [](int g) { return g == 1 ? 0 : g == 2 ? 2 : g == 3 ? 2 : 4; };

  BigInt total = 0;
  for (int d : divisors(m)) {
    const int g = std::gcd(m / d, 6);
    BigInt term = alpha(g) * path_closed_form(d, 3) + beta(g) * path_closed_form(d - 1, 3);
    if (term % 6 != 0) {
      throw ConsistencyError("rotation term for d=" + std::to_string(d) + " is not divisible by 6");
    }
    total += BigInt(euler_totient(static_cast<std::uint64_t>(m / d))) * (term / 6);
  }

  if (m % 2 == 1) {
    BigInt reflections = BigInt(m) * path_closed_form((m + 1) / 2, 3);
    if (reflections % 6 != 0) throw ConsistencyError("reflection term is not divisible by 6");
    total += reflections / 6;
  } else {
    total += BigInt(m) * (BigInt(1) << (m / 2 - 1));
  }

  if (total % (2 * m) != 0) {
    throw ConsistencyError("double-coset sum not divisible by 2m at m=" + std::to_string(m));
  }
  return total / (2 * m);
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("totient of 0");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<ColoringAction> dihedral_actions(int m) {
  std::vector<ColoringAction> out;
  for (const auto& g : dihedral_group(m)) {
    out.emplace_back([g](const CycleColoring& c) { return act_dihedral(g, c); });
  }
  return out;
}

std::vector<ColoringAction> combined_actions(int m, int s) {
  std::vector<ColoringAction> out;
  const auto perms = color_permutations(s);
  for (const auto& g : dihedral_group(m)) {
    for (const auto& p : perms) {
      out.emplace_back([g, p](const CycleColoring& c) { return act_color_symmetry(p, act_dihedral(g, c)); });
    }
  }
  return out;
}

std::size_t burnside_orbit_count(std::span<const CycleColoring> elements,
                                 std::span<const ColoringAction> group) {
  if (group.empty()) throw InvalidArgument("Burnside count over an empty group");
  if (elements.empty()) return 0;

  const int m = elements.front().arcs();
  const int s = elements.front().color_count();
  if (checked_power(static_cast<std::uint64_t>(s), m) == 0) {
    throw CapacityError("coloring codes do not fit in 64 bits");
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].arcs() != m || elements[i].color_count() != s) {
      throw InvalidArgument("element set mixes arc or color counts");
    }
    index.emplace_back(elements[i].code(), i);
  }
  std::sort(index.begin(), index.end());
  for (std::size_t i = 1; i < index.size(); ++i) {
    if (index[i].first == index[i - 1].first) throw InvalidArgument("element set contains duplicates");
  }

  const IndexedAction action{
      elements.size(), group.size(), [&](std::size_t g, std::size_t x) -> std::size_t {
        const CycleColoring y = group[g](elements[x]);
        if (y.arcs() != m || y.color_count() != s) return elements.size();
        const std::uint64_t key = y.code();
        auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(key, std::size_t{0}));
        if (it == index.end() || it->first != key) return elements.size();
        return it->second;
      }};
  return certified_orbit_count(action).orbits;
}

}  // namespace torus2::cycles

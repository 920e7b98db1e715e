#include "torus2/classification.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "torus2/cycle_colorings.hpp"
#include "torus2/errors.hpp"
#include "torus2/orbits.hpp"

namespace torus2::classify {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::uint32_t component_mask(int r) { return (1u << r) - 1u; }

// Permutation tables of every group factor on the two coordinates of the
// product set H^1 x Lambda.
struct ProductTables {
  std::size_t h1_size = 0;
  std::size_t lambda_size = 0;
  Table gl_on_h1, gl_on_lambda;
  Table aut_on_h1;
  Table facets_on_lambda;
};

ProductTables build_tables(const H1Model& h1, std::span<const charfn::CharacteristicFunction> lambdas,
                           std::span<const gf2::Matrix> gl, std::span<const charfn::FacetAutomorphism> facet_auts) {
  ProductTables t;
  t.h1_size = h1.element_count();
  t.lambda_size = lambdas.size();
  const charfn::FunctionIndex index(lambdas);
  auto lookup = [&](const charfn::CharacteristicFunction& y) {
    const std::size_t i = index.find(y);
    if (i == index.size()) throw ConsistencyError("action leaves the set of characteristic functions");
    return i;
  };
  for (const auto& sigma : gl) {
    std::vector<std::size_t> on_h1(t.h1_size), on_lambda(t.lambda_size);
    for (std::size_t c = 0; c < t.h1_size; ++c) on_h1[c] = h1.apply_gl(sigma, static_cast<std::uint32_t>(c));
    for (std::size_t x = 0; x < t.lambda_size; ++x) on_lambda[x] = lookup(charfn::gl_act(sigma, lambdas[x]));
    t.gl_on_h1.push_back(std::move(on_h1));
    t.gl_on_lambda.push_back(std::move(on_lambda));
  }
  for (std::size_t a = 0; a < h1.aut_order(); ++a) {
    std::vector<std::size_t> on_h1(t.h1_size);
    for (std::size_t c = 0; c < t.h1_size; ++c) on_h1[c] = h1.apply_aut(a, static_cast<std::uint32_t>(c));
    t.aut_on_h1.push_back(std::move(on_h1));
  }
  for (const auto& h : facet_auts) {
    std::vector<std::size_t> on_lambda(t.lambda_size);
    for (std::size_t x = 0; x < t.lambda_size; ++x) on_lambda[x] = lookup(charfn::aut_act(h, lambdas[x]));
    t.facets_on_lambda.push_back(std::move(on_lambda));
  }
  return t;
}

struct Factors {
  bool gl = false;
  bool aut_h1 = false;
  bool facets = false;
};

// The direct product of the selected factors acting on H^1 x Lambda, every
// group element listed.
IndexedAction product_action(const ProductTables& t, Factors f) {
  const std::size_t ng = f.gl ? t.gl_on_h1.size() : 1;
  const std::size_t na = f.aut_h1 ? t.aut_on_h1.size() : 1;
  const std::size_t nf = f.facets ? t.facets_on_lambda.size() : 1;
  IndexedAction action;
  action.set_size = t.h1_size * t.lambda_size;
  action.group_size = ng * na * nf;
  action.image = [&t, f, na, nf](std::size_t g, std::size_t e) {
    std::size_t c = e / t.lambda_size;
    std::size_t x = e % t.lambda_size;
    const std::size_t j = g % nf;
    const std::size_t k = (g / nf) % na;
    const std::size_t i = g / (nf * na);
    if (f.gl) {
      c = t.gl_on_h1[i][c];
      x = t.gl_on_lambda[i][x];
    }
    if (f.aut_h1) c = t.aut_on_h1[k][c];
    if (f.facets) x = t.facets_on_lambda[j][x];
    return c * t.lambda_size + x;
  };
  return action;
}

std::size_t certified_product_orbits(const ProductTables& t, Factors f, bool* free = nullptr) {
  if (t.h1_size * t.lambda_size == 0) {
    if (free) *free = true;
    return 0;
  }
  const auto summary = certified_orbit_count(product_action(t, f));
  if (free) *free = summary.free;
  return summary.orbits;
}

}  // namespace

H1Model::H1Model(int r, int n, std::vector<gf2::Matrix> aut_image) : r_(r), n_(n), aut_image_(std::move(aut_image)) {
  if (n < 1 || n > gf2::kMaxEnumerableRank) throw InvalidArgument("torus rank must lie in [1, 4]");
  if (r < 0 || r > 8) throw InvalidArgument("H^1 rank must lie in [0, 8]");
  if (r * n > 20) throw CapacityError("H^1 has more than 2^20 elements");
  if (r == 0) {
    if (!aut_image_.empty()) throw InvalidArgument("rank-0 H^1 carries only the trivial action");
    return;
  }
  if (aut_image_.empty()) throw ConsistencyError("image of Aut(Q) is empty");
  std::sort(aut_image_.begin(), aut_image_.end());
  aut_image_.erase(std::unique(aut_image_.begin(), aut_image_.end()), aut_image_.end());
  const std::set<gf2::Matrix> members(aut_image_.begin(), aut_image_.end());
  for (const auto& a : aut_image_) {
    if (a.rank() != r) throw DimensionMismatch("Aut(Q) image matrix has the wrong rank");
    if (!a.is_invertible()) throw ConsistencyError("Aut(Q) image contains a singular matrix");
    if (!members.contains(a.inverse())) throw ConsistencyError("Aut(Q) image is not closed under inverses");
    for (const auto& b : aut_image_) {
      if (!members.contains(a * b)) throw ConsistencyError("Aut(Q) image is not closed under products");
    }
  }
}

H1Model H1Model::from_generators(int r, int n, std::span<const gf2::Matrix> generators) {
  if (r == 0) {
    if (!generators.empty()) throw InvalidArgument("rank-0 H^1 takes no generators");
    return H1Model(0, n, {});
  }
  std::set<gf2::Matrix> group{gf2::Matrix::identity(r)};
  std::vector<gf2::Matrix> frontier{gf2::Matrix::identity(r)};
  while (!frontier.empty()) {
    std::vector<gf2::Matrix> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        if (g.rank() != r) throw DimensionMismatch("generator has the wrong rank");
        if (!g.is_invertible()) throw InvalidArgument("generator is singular");
        const gf2::Matrix p = g * a;
        if (group.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return H1Model(r, n, std::vector<gf2::Matrix>(group.begin(), group.end()));
}

H1Model H1Model::disk(int n) { return H1Model(0, n, {}); }

H1Model H1Model::projective_plane_minus_disk(int n) { return H1Model(1, n, {gf2::Matrix::identity(1)}); }

H1Model H1Model::torus_minus_disk(int n) { return H1Model(2, n, gf2::enumerate_gl(2)); }

H1Model H1Model::preset(std::string_view name, int n) {
  if (name == "disk") return disk(n);
  if (name == "rp2") return projective_plane_minus_disk(n);
  if (name == "torus") return torus_minus_disk(n);
  throw InvalidArgument("unknown surface preset '" + std::string(name) + "'");
}

std::uint32_t H1Model::apply_aut(std::size_t a, std::uint32_t x) const {
  if (r_ == 0) return x;
  const gf2::Matrix& m = aut_image_.at(a);
  std::uint32_t out = 0;
  for (int j = 0; j < n_; ++j) {
    const std::uint32_t comp = (x >> (j * r_)) & component_mask(r_);
    out |= gf2::apply(m, gf2::Vector(r_, comp)).bits() << (j * r_);
  }
  return out;
}

std::uint32_t H1Model::apply_gl(const gf2::Matrix& sigma, std::uint32_t x) const {
  if (sigma.rank() != n_) throw DimensionMismatch("coefficient automorphism has the wrong rank");
  if (r_ == 0) return x;
  // x = sum_j c_j (x) e_j  ->  sum_j c_j (x) sigma(e_j).
  std::uint32_t out = 0;
  for (int j = 0; j < n_; ++j) {
    const std::uint32_t comp = (x >> (j * r_)) & component_mask(r_);
    for (int i = 0; i < n_; ++i) {
      if (sigma.entry(i, j)) out ^= comp << (i * r_);
    }
  }
  return out;
}

std::size_t count_equivalence_classes(const H1Model& h1, std::span<const charfn::CharacteristicFunction> lambdas) {
  if (lambdas.empty()) return 0;
  if (lambdas.front().rank() != h1.n()) throw DimensionMismatch("H^1 model and characteristic functions differ in rank");
  const auto gl = gf2::enumerate_gl(h1.n());
  const auto tables = build_tables(h1, lambdas, gl, {});
  bool free = false;
  const std::size_t orbits = certified_product_orbits(tables, {.gl = true}, &free);
  if (free && orbits * gl.size() != h1.element_count() * lambdas.size()) {
    throw ConsistencyError("free action but |H^1||Lambda| != orbits * |GL(n,Z2)|");
  }
  return orbits;
}

BigInt count_equivariant_classes_surface(const space::SurfaceWithBoundary& q, const BigInt& h_of_q) {
  if (q.vertices() < 2) throw InvalidArgument("the boundary circle needs at least 2 vertices");
  return h_of_q * cycles::count_orbits_closed_form_B(q.vertices());
}

std::size_t compute_h(const H1Model& h1) {
  if (h1.n() != 2) throw InvalidArgument("h(Q) is defined for (Z2)^2 coefficients");
  IndexedAction action;
  action.set_size = h1.element_count();
  action.group_size = h1.aut_order();
  action.image = [&h1](std::size_t a, std::size_t x) { return h1.apply_aut(a, static_cast<std::uint32_t>(x)); };
  return certified_orbit_count(action).orbits;
}

std::size_t count_equivariant_classes_small_cover(const space::FacePoset& p, int n, const charfn::Budget& budget) {
  return count_equivariant_classes(H1Model::disk(n), p, n, budget);
}

std::size_t count_equivariant_classes(const H1Model& h1, const space::FacePoset& p, int n,
                                      const charfn::Budget& budget) {
  if (h1.n() != n) throw DimensionMismatch("H^1 model and rank differ");
  const auto lambdas = charfn::enumerate_char_functions(p, n, budget);
  const auto auts = charfn::facet_automorphism_group(p, budget);
  const auto tables = build_tables(h1, lambdas, {}, auts);
  return certified_product_orbits(tables, {.aut_h1 = true, .facets = true});
}

std::size_t count_weak_classes(const H1Model& h1, const space::FacePoset& p, int n, const charfn::Budget& budget) {
  if (h1.n() != n) throw DimensionMismatch("H^1 model and rank differ");
  const auto lambdas = charfn::enumerate_char_functions(p, n, budget);
  const auto gl = gf2::enumerate_gl(n);
  const auto auts = charfn::facet_automorphism_group(p, budget);
  const auto tables = build_tables(h1, lambdas, gl, auts);
  return certified_product_orbits(tables, {.gl = true, .aut_h1 = true, .facets = true});
}

ClassificationReport classify(const H1Model& h1, const space::FacePoset& p, int n, const charfn::Budget& budget) {
  if (h1.n() != n) throw DimensionMismatch("H^1 model and rank differ");
  ClassificationReport report;
  const auto lambdas = charfn::enumerate_char_functions(p, n, budget);
  const auto gl = gf2::enumerate_gl(n);
  const auto auts = charfn::facet_automorphism_group(p, budget);
  const auto tables = build_tables(h1, lambdas, gl, auts);

  report.lambda_count = lambdas.size();
  report.h1_count = h1.element_count();
  report.equivalence_count = certified_product_orbits(tables, {.gl = true}, &report.free);
  report.equivariant_count = certified_product_orbits(tables, {.aut_h1 = true, .facets = true});
  report.weak_count = certified_product_orbits(tables, {.gl = true, .aut_h1 = true, .facets = true});

  const std::size_t total = report.h1_count * report.lambda_count;
  bool consistent = report.weak_count <= report.equivalence_count && report.weak_count <= report.equivariant_count &&
                    report.equivalence_count <= total && report.equivariant_count <= total;
  if (p.has_vertex() && total != 0) {
    consistent = consistent && report.free && report.equivalence_count * gl.size() == total;
  }
  report.consistent = consistent;
  return report;
}

}  // namespace torus2::classify

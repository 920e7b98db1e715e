#include "torus2/quotient_complex.hpp"

#include <map>
#include <sstream>

#include "torus2/errors.hpp"
#include "torus2/orbits.hpp"

namespace torus2::cover {

namespace {

std::uint32_t color_vector(std::uint8_t color) { return static_cast<std::uint32_t>(color) + 1u; }

std::uint32_t coset_rep(std::uint32_t g, std::uint32_t generator) { return std::min(g, g ^ generator); }

// For each 1-cell, the (2-cell, position in word) pairs using it.
std::vector<std::vector<std::pair<int, int>>> edge_incidences(const IdentificationComplex& c) {
  const auto& cells = c.cells();
  std::vector<std::vector<std::pair<int, int>>> out(cells.size());
  for (std::size_t f = 0; f < cells.size(); ++f) {
    if (cells[f].dim != 2) continue;
    for (std::size_t i = 0; i < cells[f].boundary.size(); ++i) {
      out[static_cast<std::size_t>(cells[f].boundary[i])].emplace_back(static_cast<int>(f), static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace

IdentificationComplex::IdentificationComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
  const int n = static_cast<int>(cells_.size());
  for (const auto& cell : cells_) {
    auto expect_dim = [&](int id, int d) {
      if (id < 0 || id >= n || cells_[static_cast<std::size_t>(id)].dim != d) {
        throw InvalidArgument("cell boundary refers to a missing " + std::to_string(d) + "-cell");
      }
    };
    switch (cell.dim) {
      case 0:
        if (!cell.boundary.empty()) throw InvalidArgument("0-cell with a boundary");
        break;
      case 1:
        if (cell.boundary.size() != 2) throw InvalidArgument("1-cell needs two endpoints");
        for (int v : cell.boundary) expect_dim(v, 0);
        break;
      case 2:
        if (cell.boundary.empty() || cell.direction.size() != cell.boundary.size()) {
          throw InvalidArgument("2-cell needs a directed edge word");
        }
        for (int e : cell.boundary) expect_dim(e, 1);
        for (int d : cell.direction) {
          if (d != 1 && d != -1) throw InvalidArgument("edge direction must be +1 or -1");
        }
        break;
      default:
        throw InvalidArgument("cells of dimension > 2 are not supported");
    }
  }
}

int IdentificationComplex::cell_count(int dim) const {
  int count = 0;
  for (const auto& cell : cells_) count += cell.dim == dim;
  return count;
}

IdentificationComplex build_small_cover(int m, const cycles::CycleColoring& lambda) {
  if (m < 3) throw InvalidArgument("small covers are built over m-gons with m >= 3");
  if (lambda.arcs() != m) throw InvalidArgument("coloring does not match the polygon");
  if (lambda.color_count() != 3) throw InvalidArgument("small covers over polygons use three colors");

  std::vector<Cell> cells;
  // Face ids follow space::build_polygon. Vertex k: G_F is all of (Z2)^2, so a single cell.
  for (int k = 0; k < m; ++k) cells.push_back({0, 1 + m + k, 0, {}, {}});

  // Edge k has two cells, one per coset of <lambda(k)>.
  std::map<std::pair<int, std::uint32_t>, int> edge_cell;
  for (int k = 0; k < m; ++k) {
    const std::uint32_t gen = color_vector(lambda[k]);
    for (std::uint32_t g = 0; g < 4; ++g) {
      if (coset_rep(g, gen) != g) continue;
      edge_cell[{k, g}] = static_cast<int>(cells.size());
      cells.push_back({1, 1 + k, g, {k, (k + 1) % m}, {}});
    }
  }

  // The interior has trivial isotropy: four 2-cells, each bounded by the
  // edge cells of its own cosets.
  for (std::uint32_t g = 0; g < 4; ++g) {
    Cell face{2, 0, g, {}, {}};
    for (int k = 0; k < m; ++k) {
      face.boundary.push_back(edge_cell.at({k, coset_rep(g, color_vector(lambda[k]))}));
      face.direction.push_back(1);
    }
    cells.push_back(std::move(face));
  }
  return IdentificationComplex(std::move(cells));
}

IdentificationComplex disjoint_union(const IdentificationComplex& a, const IdentificationComplex& b) {
  std::vector<Cell> cells = a.cells();
  const int offset = static_cast<int>(cells.size());
  for (Cell cell : b.cells()) {
    for (int& id : cell.boundary) id += offset;
    cells.push_back(std::move(cell));
  }
  return IdentificationComplex(std::move(cells));
}

long long euler_of_complex(const IdentificationComplex& c) {
  return static_cast<long long>(c.cell_count(0)) - c.cell_count(1) + c.cell_count(2);
}

int connected_components(const IdentificationComplex& c) {
  const auto& cells = c.cells();
  DisjointSets sets(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (int b : cells[i].boundary) sets.unite(i, static_cast<std::size_t>(b));
  }
  return static_cast<int>(sets.class_count());
}

bool every_edge_doubly_incident(const IdentificationComplex& c) {
  const auto incidences = edge_incidences(c);
  for (std::size_t e = 0; e < c.cells().size(); ++e) {
    if (c.cells()[e].dim == 1 && incidences[e].size() != 2) return false;
  }
  return true;
}

bool is_closed_surface(const IdentificationComplex& c) {
  if (!every_edge_doubly_incident(c)) return false;
  const auto& cells = c.cells();

  // Link nodes are edge ends (edge id, 0 = tail / 1 = head); every corner of
  // a 2-cell joins the end where one word edge stops to the end where the
  // next one starts.
  auto node = [](int edge, int end) { return static_cast<std::size_t>(2 * edge + end); };
  DisjointSets link(2 * cells.size());
  std::vector<int> degree(2 * cells.size(), 0);
  for (const auto& cell : cells) {
    if (cell.dim != 2) continue;
    const std::size_t len = cell.boundary.size();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = (i + 1) % len;
      const std::size_t out = node(cell.boundary[i], cell.direction[i] == 1 ? 1 : 0);
      const std::size_t in = node(cell.boundary[j], cell.direction[j] == 1 ? 0 : 1);
      const int v_out = cells[static_cast<std::size_t>(cell.boundary[i])].boundary[out % 2];
      const int v_in = cells[static_cast<std::size_t>(cell.boundary[j])].boundary[in % 2];
      if (v_out != v_in) return false;
      link.unite(out, in);
      ++degree[out];
      ++degree[in];
    }
  }
  // Each vertex: all incident edge ends have link degree 2 and form one
  // component.
  std::map<int, std::size_t> vertex_root;
  for (std::size_t e = 0; e < cells.size(); ++e) {
    if (cells[e].dim != 1) continue;
    for (int end = 0; end < 2; ++end) {
      const std::size_t nd = node(static_cast<int>(e), end);
      if (degree[nd] != 2) return false;
      const int v = cells[e].boundary[static_cast<std::size_t>(end)];
      const std::size_t root = link.find(nd);
      auto [it, inserted] = vertex_root.emplace(v, root);
      if (!inserted && it->second != root) return false;
    }
  }
  for (std::size_t v = 0; v < cells.size(); ++v) {
    if (cells[v].dim == 0 && !vertex_root.contains(static_cast<int>(v))) return false;
  }
  return true;
}

bool orientable_by_propagation(const IdentificationComplex& c) {
  if (!every_edge_doubly_incident(c)) throw InvalidArgument("orientation propagation needs a closed complex");
  const auto& cells = c.cells();
  const auto incidences = edge_incidences(c);
  std::vector<int> sign(cells.size(), 0);
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (cells[start].dim != 2 || sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < cells[f].boundary.size(); ++i) {
        const int e = cells[f].boundary[i];
        const int here = sign[f] * cells[f].direction[i];
        for (const auto& [g, pos] : incidences[static_cast<std::size_t>(e)]) {
          if (static_cast<std::size_t>(g) == f && static_cast<std::size_t>(pos) == i) continue;
          // The other side must run the edge the opposite way.
          const int dir = cells[static_cast<std::size_t>(g)].direction[static_cast<std::size_t>(pos)];
          const int required = -here * dir;
          if (sign[static_cast<std::size_t>(g)] == 0) {
            sign[static_cast<std::size_t>(g)] = required;
            stack.push_back(static_cast<std::size_t>(g));
          } else if (sign[static_cast<std::size_t>(g)] != required) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

SurfaceType surface_type(const IdentificationComplex& c, const cycles::CycleColoring& lambda) {
  if (c.cell_count(0) != lambda.arcs()) throw InvalidArgument("complex was not built from this coloring");
  const bool by_colors = lambda.colors_used() == 2;
  const bool by_propagation = orientable_by_propagation(c);
  if (by_colors != by_propagation) {
    throw ConsistencyError("orientability criteria disagree for coloring " + lambda.to_string());
  }
  return {euler_of_complex(c), by_colors};
}

std::vector<int> orbit_census(const space::FacePoset& p, const charfn::CharacteristicFunction& lambda) {
  if (!charfn::is_valid(p, lambda)) throw InvalidArgument("not a characteristic function on this poset");
  const int n = lambda.rank();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.face_count()));
  for (const auto& f : p.faces()) {
    std::vector<gf2::Vector> span_of;
    for (int k = 0; k < p.facet_count(); ++k) {
      if ((f.facets >> k) & 1u) span_of.push_back(lambda[k]);
    }
    out.push_back(1 << (n - gf2::rank(span_of)));
  }
  return out;
}

std::string format_complex(const IdentificationComplex& c) {
  std::ostringstream out;
  const auto& cells = c.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << cells[i].dim << ' ' << i;
    for (std::size_t k = 0; k < cells[i].boundary.size(); ++k) {
      out << ' ';
      if (cells[i].dim == 2 && cells[i].direction[k] == -1) out << '-';
      out << cells[i].boundary[k];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace torus2::cover

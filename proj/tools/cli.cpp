#include "cli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "torus2/char_functions.hpp"
#include "torus2/classification.hpp"
#include "torus2/cycle_colorings.hpp"
#include "torus2/errors.hpp"
#include "torus2/euler_orient.hpp"
#include "torus2/io.hpp"
#include "torus2/orbit_space.hpp"
#include "torus2/quotient_complex.hpp"

namespace torus2::cli {

namespace {

std::string str(const BigInt& v) { return v.str(); }

template <class T>
std::string str(T v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else {
    return std::to_string(v);
  }
}

cycles::EnumerationBudget coloring_budget(const CommandConfig& c) {
  cycles::EnumerationBudget b;
  if (c.budget) b.max_sequences = *c.budget;
  return b;
}

charfn::Budget function_budget(const CommandConfig& c) {
  charfn::Budget b;
  if (c.budget) b.max_functions = static_cast<std::size_t>(*c.budget);
  return b;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("bad " + what + " '" + text + "'");
}

struct SpaceModel {
  std::string name;
  space::FacePoset poset;
  std::optional<space::SurfaceWithBoundary> surface;
};

SpaceModel load_space(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "polygon") {
    const int m = parse_int(arg, "polygon size");
    return {text, space::build_polygon(m), space::SurfaceWithBoundary::disk(m)};
  }
  if (kind == "simplex") return {text, space::build_simplex(parse_int(arg, "simplex dimension")), std::nullopt};
  if (kind == "prism" && arg.empty()) return {text, space::build_prism(), std::nullopt};
  if (kind == "annulus" && arg.empty()) return {text, space::build_vertex_free_surface(0, 2), std::nullopt};
  if (kind == "file" && !arg.empty()) return {text, io::read_poset_file(arg), std::nullopt};
  throw InvalidArgument("unknown space '" + text + "' (polygon:m, simplex:n, prism, annulus, file:PATH)");
}

classify::H1Model load_surface(const std::string& text) {
  if (text.rfind("custom:", 0) == 0) {
    const auto gens = io::read_h1_file(text.substr(7));
    return classify::H1Model::from_generators(gens.r, 2, gens.generators);
  }
  return classify::H1Model::preset(text, 2);
}

space::SurfaceWithBoundary surface_shape(const std::string& text, int m) {
  if (text == "rp2") return space::SurfaceWithBoundary::projective_plane_minus_disk(m);
  if (text == "torus") return space::SurfaceWithBoundary::torus_minus_disk(m);
  return space::SurfaceWithBoundary::disk(m);
}

std::vector<int> m_range(const CommandConfig& c) {
  const int last = c.max_m.value_or(c.m);
  if (last < c.m) throw InvalidArgument("--max must be at least --m");
  std::vector<int> out;
  for (int m = c.m; m <= last; ++m) out.push_back(m);
  return out;
}

RunResult emit(const Table& t, const CommandConfig& c, int exit_code = kExitOk) {
  return {exit_code, render(t, c.format), ""};
}

RunResult cmd_count(const CommandConfig& c) {
  if (c.quantity != "A" && c.quantity != "B" && c.quantity != "C") {
    throw InvalidArgument("count expects A, B or C");
  }
  if (c.quantity == "C" && c.s != 3) throw InvalidArgument("C is defined for three colors only");
  Table t;
  t.columns = {"m", "s", c.quantity};
  for (int m : m_range(c)) {
    BigInt v;
    if (c.quantity == "A") {
      v = cycles::count_closed_form(m, c.s);
    } else if (c.quantity == "B") {
      v = cycles::count_orbits_closed_form_B_scolor(m, c.s);
    } else {
      v = cycles::count_double_cosets_closed_form_C(m);
    }
    t.add_row({str(m), str(c.s), str(v)});
  }
  return emit(t, c);
}

RunResult cmd_oracle(const CommandConfig& c) {
  Table t;
  t.columns = {"m", "s", "quantity", "closed_form", "brute_force", "match"};
  bool all = true;
  for (int m : m_range(c)) {
    const auto colorings = cycles::enumerate_colorings(m, c.s, coloring_budget(c));
    const auto dihedral = cycles::dihedral_actions(m);
    auto row = [&](const std::string& q, const BigInt& closed, std::size_t brute) {
      const bool ok = closed == brute;
      all = all && ok;
      t.add_row({str(m), str(c.s), q, str(closed), str(brute), str(ok)});
    };
    row("A", cycles::count_closed_form(m, c.s), colorings.size());
    row("B", cycles::count_orbits_closed_form_B_scolor(m, c.s), cycles::burnside_orbit_count(colorings, dihedral));
    if (c.s == 3) {
      const auto combined = cycles::combined_actions(m, 3);
      row("C", cycles::count_double_cosets_closed_form_C(m), cycles::burnside_orbit_count(colorings, combined));
    }
  }
  return emit(t, c, all ? kExitOk : kExitMismatch);
}

RunResult cmd_charfns(const CommandConfig& c) {
  const SpaceModel model = load_space(c.space);
  const int n = c.n.value_or(model.poset.dim());
  const auto budget = function_budget(c);
  const auto lambdas = charfn::enumerate_char_functions(model.poset, n, budget);
  const auto gl = charfn::count_gl_orbits(model.poset, lambdas);
  const auto auts = charfn::facet_automorphism_group(model.poset, budget);
  const std::size_t aut_orbits = classify::count_equivariant_classes_small_cover(model.poset, n, budget);
  const std::size_t double_cosets = charfn::count_double_cosets(model.poset, n, budget);

  Table t;
  t.columns = {"space", "n", "facets", "characteristic_functions", "gl_orbits", "gl_free",
               "aut_order", "aut_orbits", "double_cosets"};
  t.add_row({model.name, str(n), str(model.poset.facet_count()), str(lambdas.size()), str(gl.orbits),
             str(gl.free), str(auts.size()), str(aut_orbits), str(double_cosets)});
  return emit(t, c);
}

RunResult cmd_euler(const CommandConfig& c) {
  std::optional<SpaceModel> model;
  if (!c.space.empty()) {
    model = load_space(c.space);
  } else {
    if (!c.genus && !c.orientable && c.m == 0) throw InvalidArgument("euler needs --space or surface parameters");
    const bool orientable = c.orientable.value_or(true);
    const space::SurfaceWithBoundary q(orientable, c.genus.value_or(orientable ? 0 : 1), c.m);
    std::ostringstream name;
    name << (orientable ? "orientable" : "nonorientable") << " genus " << q.genus() << " m " << q.vertices();
    model = SpaceModel{name.str(), space::build_surface_poset(q), q};
  }
  const long long total = euler::euler_total(model->poset);
  std::string two_d;
  std::string agree;
  if (model->surface) {
    const long long v = euler::euler_2d(*model->surface);
    two_d = str(v);
    agree = str(v == total);
  }
  Table t;
  t.columns = {"space", "dim", "euler_total", "euler_2d", "agree"};
  t.add_row({model->name, str(model->poset.dim()), str(total), two_d, agree});
  const bool mismatch = model->surface && euler::euler_2d(*model->surface) != total;
  return emit(t, c, mismatch ? kExitMismatch : kExitOk);
}

RunResult cmd_classify(const CommandConfig& c) {
  if (c.surface.empty()) throw InvalidArgument("classify needs --surface");
  const classify::H1Model h1 = load_surface(c.surface);
  const std::size_t h = classify::compute_h(h1);
  Table t;
  t.columns = {"surface", "m", "h", "B", "classes"};
  if (c.verify) t.columns.push_back("verified");
  bool all = true;
  for (int m : m_range(c)) {
    const auto q = surface_shape(c.surface, m);
    const BigInt product = classify::count_equivariant_classes_surface(q, h);
    std::vector<std::string> row{c.surface, str(m), str(h), str(cycles::count_orbits_closed_form_B(m)), str(product)};
    if (c.verify) {
      const auto poset = space::build_surface_poset(q);
      const std::size_t direct = classify::count_equivariant_classes(h1, poset, 2, function_budget(c));
      const bool ok = product == direct;
      all = all && ok;
      row.push_back(str(ok));
    }
    t.add_row(std::move(row));
  }
  return emit(t, c, all ? kExitOk : kExitMismatch);
}

RunResult cmd_cover(const CommandConfig& c) {
  const int m = c.m;
  if (!c.lambda.empty()) {
    std::vector<std::uint8_t> colors;
    std::stringstream in(c.lambda);
    std::string item;
    while (std::getline(in, item, ',')) {
      const int v = parse_int(item, "color");
      if (v < 0 || v > 2) throw InvalidArgument("colors must be 0, 1 or 2");
      colors.push_back(static_cast<std::uint8_t>(v));
    }
    const cycles::CycleColoring lambda(3, std::move(colors));
    const auto complex = cover::build_small_cover(m, lambda);
    if (c.export_cells) return {kExitOk, cover::format_complex(complex), ""};
    const auto type = cover::surface_type(complex, lambda);
    Table t;
    t.columns = {"m", "lambda", "euler", "components", "closed", "orientable"};
    t.add_row({str(m), lambda.to_string(), str(type.euler), str(cover::connected_components(complex)),
               str(cover::is_closed_surface(complex)), str(type.orientable)});
    return emit(t, c);
  }

  std::map<cover::SurfaceType, std::size_t> census;
  bool healthy = true;
  for (const auto& lambda : cycles::enumerate_colorings(m, 3, coloring_budget(c))) {
    const auto complex = cover::build_small_cover(m, lambda);
    healthy = healthy && cover::connected_components(complex) == 1 && cover::is_closed_surface(complex) &&
              cover::euler_of_complex(complex) == 4 - m;
    ++census[cover::surface_type(complex, lambda)];
  }
  Table t;
  t.columns = {"m", "euler", "orientable", "colorings"};
  for (const auto& [type, count] : census) t.add_row({str(m), str(type.euler), str(type.orientable), str(count)});
  return emit(t, c, healthy ? kExitOk : kExitMismatch);
}

}  // namespace

RunResult run(const CommandConfig& config) {
  try {
    if (config.subcommand == "count") return cmd_count(config);
    if (config.subcommand == "oracle") return cmd_oracle(config);
    if (config.subcommand == "charfns") return cmd_charfns(config);
    if (config.subcommand == "euler") return cmd_euler(config);
    if (config.subcommand == "classify") return cmd_classify(config);
    if (config.subcommand == "cover") return cmd_cover(config);
    return {kExitUsage, "", "unknown subcommand '" + config.subcommand + "'\n"};
  } catch (const CapacityError& e) {
    return {kExitCapacity, "", std::string("capacity exceeded: ") + e.what() + "\n"};
  } catch (const ConsistencyError& e) {
    return {kExitMismatch, "", std::string("verification failed: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    return {kExitUsage, "", std::string("invalid argument: ") + e.what() + "\n"};
  }
}

RunResult run_args(const std::vector<std::string>& args) {
  CLI::App app{"Enumeration and classification of locally standard 2-torus manifolds", "torus2"};
  app.require_subcommand(1);
  CommandConfig config;

  std::string format = "plain";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--budget", config.budget, "Enumeration budget override");

  auto* count = app.add_subcommand("count", "Closed-form A(m), B(m), C(m)");
  count->add_option("quantity", config.quantity, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C"}));
  count->add_option("--m", config.m, "Arc count")->required();
  count->add_option("--s", config.s, "Color count (A and B)");
  count->add_option("--max", config.max_m, "Tabulate m..max");

  auto* oracle = app.add_subcommand("oracle", "Brute-force A/B/C against the closed forms");
  oracle->add_option("--m", config.m, "Arc count")->required();
  oracle->add_option("--s", config.s, "Color count");
  oracle->add_option("--max", config.max_m, "Check m..max");

  auto* charfns = app.add_subcommand("charfns", "Characteristic functions on an orbit space");
  charfns->add_option("--space", config.space, "polygon:m | simplex:n | prism | annulus | file:PATH")->required();
  charfns->add_option("--n", config.n, "Torus rank (defaults to the dimension)");

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of the manifold over an orbit space");
  euler_cmd->add_option("--space", config.space, "polygon:m | simplex:n | prism | annulus | file:PATH");
  euler_cmd->add_option("--genus", config.genus, "Genus of a one-boundary surface");
  euler_cmd->add_option("--orientable", config.orientable, "Orientability of that surface");
  euler_cmd->add_option("--m", config.m, "Vertices on its boundary");

  auto* classify_cmd = app.add_subcommand("classify", "Equivariant classes over a one-boundary surface");
  classify_cmd->add_option("--surface", config.surface, "disk | rp2 | torus | custom:FILE")->required();
  classify_cmd->add_option("--m", config.m, "Vertices on the boundary")->required();
  classify_cmd->add_option("--max", config.max_m, "Tabulate m..max");
  classify_cmd->add_flag("--verify", config.verify, "Recount over the product set");

  auto* cover_cmd = app.add_subcommand("cover", "Small covers over the m-gon as cell complexes");
  cover_cmd->add_option("--m", config.m, "Polygon size")->required();
  cover_cmd->add_option("--lambda", config.lambda, "Comma-separated colors 0,1,2 (default: all)");
  cover_cmd->add_flag("--cells", config.export_cells, "Print the cell list of a single cover");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, "", std::string(e.what()) + "\n" + app.help()};
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::plain;
  return run(config);
}

}  // namespace torus2::cli

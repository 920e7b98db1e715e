#include "torus2/io.hpp"

#include <fstream>
#include <sstream>

#include "torus2/errors.hpp"

namespace torus2::io {

namespace {

// Next non-blank, non-comment line; false at end of input.
bool next_line(std::istream& in, std::string& line, int& number) {
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::uint64_t parse_mask(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    std::uint64_t value = 0;
    if (token.rfind("0b", 0) == 0) {
      value = std::stoull(token.substr(2), &used, 2);
      used += 2;
    } else if (token.rfind("0x", 0) == 0) {
      value = std::stoull(token.substr(2), &used, 16);
      used += 2;
    } else {
      value = std::stoull(token, &used, 10);
    }
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("bad facet mask '" + token + "'", line);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return in;
}

}  // namespace

space::FacePoset parse_poset(std::istream& in) {
  std::string line;
  int number = 0;
  if (!next_line(in, line, number)) throw ParseError("empty poset file", 0);
  std::istringstream header(line);
  std::string keyword;
  int dim = 0;
  std::string extra;
  if (!(header >> keyword >> dim) || keyword != "n" || (header >> extra)) {
    throw ParseError("expected header 'n <dim>'", number);
  }

  std::vector<space::Face> faces;
  while (next_line(in, line, number)) {
    std::istringstream row(line);
    space::Face face;
    std::string mask;
    if (!(row >> face.id >> face.dim >> mask)) throw ParseError("expected '<id> <dim> <facet-mask>'", number);
    face.facets = parse_mask(mask, number);
    int chi = 0;
    int chi_boundary = 0;
    if (row >> chi) {
      if (!(row >> chi_boundary)) throw ParseError("Euler annotation needs chi and chi-boundary", number);
      face.euler = space::FaceEuler{chi, chi_boundary};
    }
    if (row >> extra) throw ParseError("trailing token '" + extra + "'", number);
    faces.push_back(face);
  }

  space::FacePoset poset = [&] {
    try {
      return space::FacePoset(dim, std::move(faces));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), 0);
    }
  }();
  if (!space::check_nice(poset)) throw ParseError("poset is not nice", 0);
  return poset;
}

space::FacePoset read_poset_file(const std::string& path) {
  auto in = open(path);
  return parse_poset(in);
}

std::string format_poset(const space::FacePoset& p) {
  std::ostringstream out;
  out << "n " << p.dim() << '\n';
  for (const auto& f : p.faces()) {
    out << f.id << ' ' << f.dim << ' ' << f.facets;
    if (f.euler) out << ' ' << f.euler->chi << ' ' << f.euler->chi_boundary;
    out << '\n';
  }
  return out.str();
}

H1Generators parse_h1_generators(std::istream& in) {
  std::string line;
  int number = 0;
  if (!next_line(in, line, number)) throw ParseError("empty H^1 action file", 0);
  std::istringstream header(line);
  std::string keyword;
  H1Generators out;
  std::string extra;
  if (!(header >> keyword >> out.r) || keyword != "r" || (header >> extra)) {
    throw ParseError("expected header 'r <rank>'", number);
  }
  if (out.r < 0 || out.r > 8) throw ParseError("rank must lie in [0, 8]", number);
  while (next_line(in, line, number)) {
    std::istringstream row(line);
    std::string bits;
    row >> bits;
    if (row >> extra) throw ParseError("one generator per line", number);
    if (out.r == 0) throw ParseError("rank 0 takes no generators", number);
    if (static_cast<int>(bits.size()) != out.r * out.r || bits.find_first_not_of("01") != std::string::npos) {
      throw ParseError("generator must be " + std::to_string(out.r * out.r) + " binary digits", number);
    }
    std::vector<std::uint32_t> columns(static_cast<std::size_t>(out.r), 0);
    for (int i = 0; i < out.r; ++i) {
      for (int j = 0; j < out.r; ++j) {
        if (bits[static_cast<std::size_t>(i * out.r + j)] == '1') columns[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
    gf2::Matrix g = gf2::Matrix::from_column_bits(out.r, columns);
    if (!g.is_invertible()) throw ParseError("generator is singular", number);
    out.generators.push_back(g);
  }
  return out;
}

H1Generators read_h1_file(const std::string& path) {
  auto in = open(path);
  return parse_h1_generators(in);
}

}  // namespace torus2::io

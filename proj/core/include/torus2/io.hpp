#pragma once

// Plain-text formats.
//
// Face poset:
//   # comment lines and blank lines are ignored
//   n <dim>
//   <id> <dim> <facet-mask> [<chi> <chi-boundary>]
//   ...
// Ids run 0..N-1 in order. The facet mask is decimal, 0x-hex or 0b-binary;
// bit k means "contained in facet k". The optional pair annotates the face
// with chi(F) and chi(boundary F). The poset must be nice.
//
// H^1 action:
//   r <rank>
//   <r*r bits, row-major>      one generator of the Aut(Q) image per line

#include <istream>
#include <string>
#include <vector>

#include "torus2/gf2.hpp"
#include "torus2/orbit_space.hpp"

namespace torus2::io {

space::FacePoset parse_poset(std::istream& in);
space::FacePoset read_poset_file(const std::string& path);
std::string format_poset(const space::FacePoset& p);

struct H1Generators {
  int r = 0;
  std::vector<gf2::Matrix> generators;
};

H1Generators parse_h1_generators(std::istream& in);
H1Generators read_h1_file(const std::string& path);

}  // namespace torus2::io

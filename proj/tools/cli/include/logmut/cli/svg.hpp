#pragma once

#include <string>
#include <vector>

#include "logmut/logdatum.hpp"

namespace logmut::svg {

struct RenderSpec {
  int scale = 40;  // px per lattice unit, >= 1
  bool label_edges = true;
  bool show_lattice_points = true;
};

/// Lattice points of the closed polygon of S (a segment in rank one).
std::vector<LatticeVec> lattice_points(const LogDatum& s);

/// Polygon of S with one "((e),(nu))" label per edge. The output depends only
/// on S and the render options. Throws InvalidDatum for scale < 1.
std::string render(const LogDatum& s, const RenderSpec& spec = {});

}  // namespace logmut::svg

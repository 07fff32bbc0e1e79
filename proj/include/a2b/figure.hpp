#pragma once

#include <string>

#include "a2b/triples.hpp"

namespace a2b {

/// Schematic SVG of one flat in simple-root coordinates: the root frame at
/// 60 degrees, the cells cut out by the other four flats, and the special
/// points. Exact data is rounded to doubles for drawing only.
std::string flat_figure_svg(const TripleAnalysis& a, FlatId id, const GridSpec& grid);

}  // namespace a2b

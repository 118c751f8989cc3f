#pragma once

#include "tritile/classifier.hpp"
#include "tritile/tiling.hpp"

#include <string>

namespace tritile {

/// Canonical exact-JSON form:
///   {"radicand": d, "reference": [[x,y],...], "tiles": [[[x,y],[x,y],[x,y]], ...]}
/// with every coordinate in the exact number grammar.  Serialization is
/// byte-deterministic, so parse/serialize round-trips are identity.
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

std::string verdict_to_json(const Verdict& v);

/// SVG 1.1 figure, 800 units wide, y axis flipped; one filled polygon per
/// tile plus the reference outline.  The only place floating point appears.
std::string render_svg(const Tiling& t, bool vertex_markers = false);

}  // namespace tritile

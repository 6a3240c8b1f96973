#pragma once

#include <string>

#include "thintree/polygon.hpp"

namespace thintree {

enum class DiagramFormat { Dot, Svg };

/// Renders a polygon as text: outside atoms on a circle (root at the top),
/// one chord per cut spanning its stretch, and the inside atoms listed with
/// their per-cut membership vector.  The representation is re-verified
/// against the component first and rejected (VerificationError) if stale.
/// DOT output is neato-ready with pinned positions; SVG is self-contained.
std::string emit_polygon_diagram(const PolygonRep& poly, const CrossComponent& comp,
                                 DiagramFormat format);

}  // namespace thintree

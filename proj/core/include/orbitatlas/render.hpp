#pragma once

#include <optional>
#include <string>

#include "orbitatlas/grassmann.hpp"

namespace orbitatlas {

/// ASCII arc diagram: arcs above the node line, half-lines per setting
/// (every fixed point when no coloring is given, black/white fixed points
/// otherwise). Nodes render as '*' (black / uncolored), 'o' (white) and '.'
/// (grey); crossings of a half-line with an arc body show as '+'.
std::string render_ascii(const Involution& w,
                         const std::optional<Coloring>& coloring = std::nullopt);

/// SVG 1.1 rendering with semicircular arcs and a fixed vertex pitch.
std::string render_svg(const Involution& w,
                       const std::optional<Coloring>& coloring = std::nullopt);

} // namespace orbitatlas

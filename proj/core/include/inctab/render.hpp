#pragma once

#include <optional>
#include <string>

#include "inctab/dynamics.hpp"

namespace inctab {

/// One line per diagram row, cells comma-delimited and each row shifted right
/// by one cell per step of j, so that cell (i, j) lands in column i + j.
std::string render_growth_text(const GrowthDiagram& gd);

/// SVG with one <g class="cell"> per cell, each drawing the cell's Young
/// diagram. Cells whose partition contains `shade` are filled.
std::string render_growth_svg(const GrowthDiagram& gd, std::optional<Box> shade = std::nullopt);

}  // namespace inctab

#pragma once

#include "sandlab/polyomino.hpp"
#include "sandlab/schroder.hpp"

#include <string>

namespace sandlab {

struct PolyominoStyle {
    bool grid = true;
    bool cti_overlay = false;  // red
    bool itc_overlay = false;  // blue
    std::string label;
};

// SVG 1.1 with 32 px cells.
std::string render_svg(const SawtoothPolyomino& p, const PolyominoStyle& style = {});

struct PathStyle {
    bool grid = true;
    bool peaks = true;   // red dots
    bool bounce = true;  // dashed
    std::string label;
};

std::string render_svg(const SchroderWord& w, const PathStyle& style = {});

}  // namespace sandlab

#pragma once

#include <map>
#include <string>

#include "mcsg/types.hpp"

namespace mcsg {

struct RenderStyle {
  std::map<std::uint32_t, std::string> palette;  // color-set bits -> SVG color
  double point_radius = 4.0;
  double stroke_width = 2.0;
  double margin = 20.0;
  double width = 800.0;  // drawing width in pixels, height follows the aspect ratio

  // red, blue, yellow and their mixtures.
  static RenderStyle standard();
  // Fill color for a color set; sets missing from the palette get a
  // deterministic hue.
  std::string color_of(ColorSet s) const;
};

std::string render_svg(const Instance& inst, const Solution* sol, const RenderStyle& style = RenderStyle::standard());

}  // namespace mcsg

#include "mcsg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mcsg/core.hpp"

namespace mcsg {

RenderStyle RenderStyle::standard() {
  RenderStyle s;
  s.palette = {
      {0b001, "red"},    {0b010, "blue"},   {0b100, "yellow"}, {0b110, "green"},
      {0b101, "orange"}, {0b011, "purple"}, {0b111, "black"},
  };
  return s;
}

std::string RenderStyle::color_of(ColorSet s) const {
  auto it = palette.find(s.bits());
  if (it != palette.end()) return it->second;
  if (s.empty()) return "gray";
  // Golden-angle hue walk keyed by the bit pattern.
  double hue = std::fmod(static_cast<double>(s.bits()) * 137.508, 360.0);
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.0f,70%%,45%%)", hue);
  return buf;
}

std::string render_svg(const Instance& inst, const Solution* sol, const RenderStyle& style) {
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (inst.n() > 0) {
    minx = maxx = inst.points[0].x;
    miny = maxy = inst.points[0].y;
    for (const Point& p : inst.points) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-12});
  double inner = style.width - 2 * style.margin;
  double scale = inner / span;
  double height = (maxy - miny) * scale + 2 * style.margin;
  auto X = [&](double x) { return style.margin + (x - minx) * scale; };
  auto Y = [&](double y) { return height - style.margin - (y - miny) * scale; };

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\" viewBox=\"0 0 %.2f %.2f\">\n",
                style.width, height, style.width, height);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (sol) {
    out += "<g stroke-linecap=\"round\">\n";
    for (const Edge& e : sol->edges) {
      const Point &a = inst.points.at(e.a), &b = inst.points.at(e.b);
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"%.2f\"/>\n",
                    X(a.x), Y(a.y), X(b.x), Y(b.y), style.color_of(edge_color(inst, e)).c_str(), style.stroke_width);
      out += buf;
    }
    out += "</g>\n";
  }
  out += "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (const Point& p : inst.points) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n", X(p.x), Y(p.y),
                  style.point_radius, style.color_of(p.colors).c_str());
    out += buf;
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace mcsg

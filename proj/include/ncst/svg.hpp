#pragma once

// Static SVG drawings of an instance. Fixed 800x800 canvas, bounding box padded
// by 5% on every side, y axis pointing up. The set labelled "B" is drawn solid
// black; every other highlighted set is dashed, coloured from a fixed palette
// in the order given.

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "ncst/instance.hpp"

namespace ncst {

inline constexpr double kSvgCanvas = 800.0;

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

}  // namespace detail

/// `sets` lists the edge-set labels to draw; labels missing from the
/// instance are ignored.
inline std::string render_svg(const Instance& inst, const std::vector<std::string>& sets) {
  static constexpr std::array<const char*, 5> palette{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::int64_t x0 = inst.points.front().x, x1 = x0, y0 = inst.points.front().y, y1 = y0;
  for (const auto& p : inst.points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double span = static_cast<double>(std::max<std::int64_t>({x1 - x0, y1 - y0, 1}));
  const double pad = 0.05 * span;
  const double scale = kSvgCanvas / (span + 2 * pad);
  // Centre the shorter dimension.
  const double ox = (kSvgCanvas - static_cast<double>(x1 - x0) * scale) / 2;
  const double oy = (kSvgCanvas - static_cast<double>(y1 - y0) * scale) / 2;
  auto sx = [&](const Point& p) { return detail::fmt2(ox + static_cast<double>(p.x - x0) * scale); };
  auto sy = [&](const Point& p) { return detail::fmt2(kSvgCanvas - oy - static_cast<double>(p.y - y0) * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  if (inst.name) {
    std::string title;
    for (char c : *inst.name) {
      if (c == '<') title += "&lt;";
      else if (c == '>') title += "&gt;";
      else if (c == '&') title += "&amp;";
      else title += c;
    }
    out += "  <title>" + title + "</title>\n";
  }
  out += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  std::size_t colour = 0;
  for (const auto& label : sets) {
    const auto it = inst.edges.find(label);
    if (it == inst.edges.end()) continue;
    std::string style;
    if (label == "B") {
      style = "stroke=\"black\" stroke-width=\"3\"";
    } else {
      style = std::string("stroke=\"") + palette[colour++ % palette.size()] +
              "\" stroke-width=\"2\" stroke-dasharray=\"10,6\"";
    }
    out += "  <g class=\"edges\" data-label=\"" + label + "\" fill=\"none\" " + style + ">\n";
    for (const auto& e : it->second) {
      const Point& a = inst.points[e.u];
      const Point& b = inst.points[e.v];
      out += "    <line x1=\"" + sx(a) + "\" y1=\"" + sy(a) + "\" x2=\"" + sx(b) + "\" y2=\"" + sy(b) + "\"/>\n";
    }
    out += "  </g>\n";
  }

  out += "  <g class=\"vertices\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (std::size_t v = 0; v < inst.points.size(); ++v) {
    const Point& p = inst.points[v];
    out += "    <circle cx=\"" + sx(p) + "\" cy=\"" + sy(p) + "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
    out += "    <text x=\"" + sx(p) + "\" y=\"" + sy(p) + "\" dx=\"9\" dy=\"-9\">" + std::to_string(v) + "</text>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace ncst

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "farey/dissect.hpp"
#include "farey/fareywalk.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace farey {

// Regular polygon layout, vertex 0 at the top, clockwise; labels drawn outside the vertices.
inline std::string svg_dissection(const Dissection& d, const std::vector<std::string>& labels = {}) {
  const double size = 400, r = 150, cx = size / 2, cy = size / 2;
  std::vector<std::pair<double, double>> pos;
  for (int i = 0; i < d.n; ++i) {
    double t = 2 * std::numbers::pi * i / d.n - std::numbers::pi / 2;
    pos.emplace_back(cx + r * std::cos(t), cy + r * std::sin(t));
  }
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "<polygon fill=\"none\" stroke=\"black\" points=\"";
  for (auto [x, y] : pos) os << x << "," << y << " ";
  os << "\"/>\n";
  for (auto [i, j] : d.diagonals) {
    auto [x1, y1] = pos[static_cast<std::size_t>(i)];
    auto [x2, y2] = pos[static_cast<std::size_t>(j)];
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"black\"/>\n";
  }
  for (int i = 0; i < d.n; ++i) {
    double t = 2 * std::numbers::pi * i / d.n - std::numbers::pi / 2;
    double lx = cx + (r + 22) * std::cos(t), ly = cy + (r + 22) * std::sin(t);
    std::string text = static_cast<std::size_t>(i) < labels.size() ? labels[static_cast<std::size_t>(i)] : std::to_string(i);
    os << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-size=\"12\" text-anchor=\"middle\">" << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// Farey edges as semicircles over a unit strip, vertices placed by rank rather than by value.
inline std::string svg_farey_strip(const LabeledTriangulation& lt) {
  const int n = lt.base.n;
  const double width = 600, base = 260, margin = 40;
  auto xpos = [&](int v) { return margin + (width - 2 * margin) * (n - 1 - v) / std::max(1, n - 1); };
  std::vector<Diagonal> edges = lt.base.diagonals;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << base + 40 << "\">\n";
  os << "<line x1=\"0\" y1=\"" << base << "\" x2=\"" << width << "\" y2=\"" << base << "\" stroke=\"gray\"/>\n";
  for (auto [i, j] : edges) {
    double x1 = xpos(i), x2 = xpos(j);
    double rad = std::abs(x2 - x1) / 2;
    os << "<path d=\"M " << std::min(x1, x2) << " " << base << " A " << rad << " " << rad << " 0 0 1 " << std::max(x1, x2)
       << " " << base << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int v = 0; v < n; ++v)
    os << "<text x=\"" << xpos(v) << "\" y=\"" << base + 20 << "\" font-size=\"12\" text-anchor=\"middle\">"
       << to_string(lt.labels[static_cast<std::size_t>(v)]) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

inline std::string dot_dissection(const Dissection& d, const std::vector<std::string>& labels = {}) {
  std::ostringstream os;
  os << "graph dissection {\n";
  for (int i = 0; i < d.n; ++i) {
    std::string text = static_cast<std::size_t>(i) < labels.size() ? labels[static_cast<std::size_t>(i)] : std::to_string(i);
    os << "  v" << i << " [label=\"" << text << "\"];\n";
  }
  for (int i = 0; i < d.n; ++i) os << "  v" << i << " -- v" << (i + 1) % d.n << ";\n";
  for (auto [i, j] : d.diagonals) os << "  v" << i << " -- v" << j << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace farey

#include "blf/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace blf {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0
  return buf;
}

const double kPi = 3.14159265358979323846;

}  // namespace

std::string render_svg(const FibrationDiagram& d) {
  require_valid(d);
  const FibrationDiagram c = canonical_form(d);
  const double cx = 220.0;
  const double cy = 220.0;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"440\" height=\"440\" fill=\"white\"/>\n";
  svg << "  <text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"13\">base: genus "
      << c.genus << ", " << c.circles.size() << " boundary circle"
      << (c.circles.size() == 1 ? "" : "s") << "</text>\n";

  // Outermost circle first so nested curves stay visible.
  const int n = static_cast<int>(c.circles.size());
  for (int i = 0; i < n; ++i) {
    const auto& circle = c.circles[n - 1 - i];
    const double radius = std::max(18.0, 190.0 - 34.0 * i);
    svg << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\""
        << (circle.component.kind == ComponentKind::klein_bottle
                ? " stroke-dasharray=\"6,4\""
                : "")
        << "/>\n";
    std::string label = kind_name(circle.component.kind);
    if (circle.component.kind == ComponentKind::necklace) {
      label += "(" + std::to_string(circle.component.k) + ")";
    }
    label += circle.component.parity > 0 ? " +1" : " -1";
    svg << "  <text x=\"" << num(cx + 6.0) << "\" y=\"" << num(cy - radius - 6.0)
        << "\" font-family=\"monospace\" font-size=\"11\">" << label << "</text>\n";
    const int k = static_cast<int>(circle.corners.size());
    for (int p = 0; p < k; ++p) {
      const double angle = -kPi / 2.0 + 2.0 * kPi * p / k;
      const double x = cx + radius * std::cos(angle);
      const double y = cy + radius * std::sin(angle);
      svg << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
          << "\" r=\"4\" fill=\"black\"/>\n";
    }
  }

  const int lef = static_cast<int>(c.lefschetz.size());
  for (int i = 0; i < lef; ++i) {
    const double x = cx + 20.0 * (i - (lef - 1) / 2.0);
    const double y = cy;
    svg << "  <path d=\"M " << num(x - 5.0) << " " << num(y - 5.0) << " L " << num(x + 5.0)
        << " " << num(y + 5.0) << " M " << num(x - 5.0) << " " << num(y + 5.0) << " L "
        << num(x + 5.0) << " " << num(y - 5.0)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    const auto& point = c.lefschetz[i];
    if (point.cycle) {
      svg << "  <text x=\"" << num(x - 5.0) << "\" y=\"" << num(y + 18.0)
          << "\" font-family=\"monospace\" font-size=\"9\">(" << point.cycle->a << ","
          << point.cycle->b << ")</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace blf

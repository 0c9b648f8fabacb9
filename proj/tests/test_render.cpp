#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blf/catalog.hpp"
#include "blf/render.hpp"

using namespace blf;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("rendering is deterministic") {
  const auto d = family_X(2, 1).diagram;
  CHECK(render_svg(d) == render_svg(d));
}

TEST_CASE("s4 Lefschetz diagram") {
  // Disk with one corner and one Lefschetz cross.
  const auto d = trade_corner_to_lefschetz(building_block("s4").diagram, CornerPos{0, 0});
  const auto svg = render_svg(d);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>\n") != std::string::npos);
  // One boundary curve plus one corner dot.
  CHECK(count(svg, "<circle") == 2);
  CHECK(count(svg, "<path") == 1);
  CHECK(svg.find("necklace(1) -1") != std::string::npos);
}

TEST_CASE("closed base renders without boundary curves") {
  FibrationDiagram closed;
  closed.genus = 2;
  const auto svg = render_svg(closed);
  CHECK(count(svg, "<circle") == 0);
  CHECK(svg.find("genus 2") != std::string::npos);
}

TEST_CASE("klein components render dashed") {
  const auto klein = trade_corner_to_lefschetz(
      trade_corner_to_lefschetz(building_block("s4").diagram, CornerPos{0, 0}),
      CornerPos{0, 0});
  const auto svg = render_svg(klein);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("klein_bottle -1") != std::string::npos);
  CHECK(count(svg, "<path") == 2);
}

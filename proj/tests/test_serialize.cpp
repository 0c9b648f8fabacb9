#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blf/catalog.hpp"
#include "blf/errors.hpp"
#include "blf/serialize.hpp"
#include "test_support.hpp"

using namespace blf;
using nlohmann::json;

TEST_CASE("round trip is isomorphic and byte idempotent") {
  blf_test::Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const auto d = rng.flip() ? blf_test::random_surgery_diagram(rng, 3)
                              : blf_test::random_direct_diagram(rng);
    const std::string bytes = serialize_diagram(d);
    const auto parsed = parse_diagram(bytes);
    CHECK(is_isomorphic(parsed, d));
    CHECK(serialize_diagram(parsed) == bytes);
    CHECK(bytes.back() == '\n');
  }
}

TEST_CASE("canonical bytes equality is isomorphism") {
  const auto cp2 = building_block("cp2").diagram;
  auto relabelled = cp2;
  relabelled.circles[0].corners = {"p", "q", "r"};
  relabelled.history.push_back({{"op", "noop"}});
  CHECK(canonical_bytes(cp2) == canonical_bytes(relabelled));
  CHECK(canonical_bytes(cp2) != canonical_bytes(building_block("s2xs2").diagram));

  blf_test::Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    const auto a = blf_test::random_direct_diagram(rng);
    const auto b = blf_test::random_direct_diagram(rng);
    CHECK((canonical_bytes(a) == canonical_bytes(b)) == is_isomorphic(a, b));
  }
}

TEST_CASE("parse failures") {
  CHECK_THROWS_AS(parse_diagram("{ truncated"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[]"), ParseError);
  CHECK_THROWS_AS(parse_diagram("{}"), ParseError);

  auto doc = diagram_to_json(building_block("cp2").diagram);
  doc["version"] = 99;
  CHECK_THROWS_AS(diagram_from_json(doc), VersionError);

  doc = diagram_to_json(building_block("cp2").diagram);
  doc["circles"][0]["component"]["parity"] = 3;
  CHECK_THROWS_AS(diagram_from_json(doc), ParseError);

  doc = diagram_to_json(building_block("cp2").diagram);
  doc["circles"][0]["component"]["kind"] = "donut";
  CHECK_THROWS_AS(diagram_from_json(doc), ParseError);

  doc = diagram_to_json(building_block("cp2").diagram);
  doc["lefschetz"].push_back({{"id", "L0"}, {"cycle", json::array({2, 4})}});
  CHECK_THROWS_AS(diagram_from_json(doc), ParseError);
}

TEST_CASE("non-canonical input is accepted and re-emitted canonically") {
  // Keys out of order, circles out of canonical order, odd ids.
  const std::string text = R"({
    "history": [],
    "flags": {"fibres_connected": true, "homologically_essential": true},
    "lefschetz": [],
    "genus": 0,
    "circles": [
      {"component": {"kind": "necklace", "parity": -1, "k": 3},
       "coorientable": true,
       "corners": ["zz", "yy", "xx"]},
      {"corners": [], "coorientable": true, "component": {"kind": "torus", "parity": 1}}
    ],
    "version": 1
  })";
  const auto d = parse_diagram(text);
  const std::string canonical = serialize_diagram(d);
  // Cornerless circle sorts first, ids are positional.
  CHECK(canonical.find("\"torus\"") < canonical.find("\"necklace\""));
  CHECK(canonical.find("c1.0") != std::string::npos);
  CHECK(canonical.find("zz") == std::string::npos);
  CHECK(serialize_diagram(parse_diagram(canonical)) == canonical);
}

TEST_CASE("chart form serialization") {
  const auto w = gt_interpolation(Rational{3, 2});
  const json doc = form_to_json(w);
  CHECK(doc["frame"] == kChartFrameTag);
  CHECK(doc["coefficients"].size() == 6);
  CHECK(form_from_json(doc) == w);

  json broken = doc;
  broken["frame"] = "other";
  CHECK_THROWS_AS(form_from_json(broken), VersionError);
  broken = doc;
  broken["coefficients"] = json::array({"1", "2"});
  CHECK_THROWS_AS(form_from_json(broken), ParseError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blf/catalog.hpp"
#include "blf/errors.hpp"
#include "test_support.hpp"

using namespace blf;

namespace {

int smooth_component_count(const FibrationDiagram& d, ComponentKind kind) {
  int n = 0;
  for (const auto& c : d.circles) {
    if (c.component.kind == kind) {
      ++n;
    }
  }
  return n;
}

int expected_parity(int n, int l) { return ((n - 1 + l) % 2 + 2) % 2 == 0 ? +1 : -1; }

}  // namespace

TEST_CASE("building blocks") {
  const auto cp2 = building_block("cp2");
  CHECK(euler_characteristic(cp2.diagram) == 3);
  CHECK(total_parity(cp2.diagram) == +1);
  CHECK(cp2.betti.chi() == 3);

  const auto cp2bar = building_block("cp2bar");
  CHECK(euler_characteristic(cp2bar.diagram) == 3);
  CHECK(total_parity(cp2bar.diagram) == -1);

  CHECK(euler_characteristic(building_block("s2xs2").diagram) == 4);
  CHECK(total_parity(building_block("s2xs2").diagram) == +1);

  const auto s4 = building_block("s4");
  CHECK(euler_characteristic(s4.diagram) == 2);
  CHECK(total_parity(s4.diagram) == -1);

  const auto disk = building_block("s3xs1_disk");
  CHECK(euler_characteristic(disk.diagram) == 0);
  CHECK(smooth_component_count(disk.diagram, ComponentKind::torus) == 1);

  const auto annulus = building_block("s3xs1_annulus");
  CHECK(euler_characteristic(annulus.diagram) == 0);
  CHECK(smooth_component_count(annulus.diagram, ComponentKind::torus) == 2);

  for (const auto& e : {cp2, cp2bar, s4}) {
    CHECK(e.diagram.homologically_essential);
    CHECK(e.diagram.fibres_connected);
    CHECK(validate(e.diagram).empty());
  }
  CHECK_THROWS_AS(building_block("t4"), InvalidInputError);
}

TEST_CASE("circle-bundle blocks") {
  const auto e = sphere_bundle_family(1, 2);
  CHECK(euler_characteristic(e.diagram) == 0);
  CHECK(e.diagram.genus == 1);
  CHECK(smooth_component_count(e.diagram, ComponentKind::torus) == 2);
  CHECK(e.betti.chi() == 0);

  CHECK(sphere_bundle_family(0, 2).diagram.circles.size() == 2);
  CHECK(sphere_bundle_family(1, 0).diagram.circles.empty());
  CHECK_THROWS_AS(sphere_bundle_family(0, 1), InvalidInputError);
  CHECK_THROWS_AS(sphere_bundle_family(0, 0), InvalidInputError);
}

TEST_CASE("family X spot values") {
  const auto x10 = family_X(1, 0);
  CHECK(corner_count(x10.diagram) == 4);
  CHECK(total_parity(x10.diagram) == +1);
  CHECK(euler_characteristic(x10.diagram) == 4);

  const auto x23 = family_X(2, 3);
  CHECK(euler_characteristic(x23.diagram) == 0);
  CHECK(total_parity(x23.diagram) == +1);

  try {
    family_X(1, 3);
    FAIL("expected inadmissibility");
  } catch (const InadmissibleError& e) {
    CHECK(e.chi() == -2);
  }

  CHECK(is_isomorphic(family_X(0, 0).diagram, building_block("s4").diagram));
  const auto x01 = family_X(0, 1);
  CHECK(is_isomorphic(x01.diagram, building_block("s3xs1_annulus").diagram));
  CHECK_THROWS_AS(family_X(-1, 0), InvalidInputError);
}

TEST_CASE("family Y spot values") {
  const auto y110 = family_Y(1, 1, 0);
  CHECK(corner_count(y110.diagram) == 4);
  CHECK(total_parity(y110.diagram) == +1);

  CHECK(is_isomorphic(family_Y(1, 0, 0).diagram, building_block("cp2").diagram));

  const auto y011 = family_Y(0, 1, 1);
  CHECK(euler_characteristic(y011.diagram) == 1);
  CHECK(total_parity(y011.diagram) == +1);

  CHECK_THROWS_AS(family_Y(0, 0, 0), InvalidInputError);
  CHECK_THROWS_AS(family_Y(0, 1, 3), InadmissibleError);
}

TEST_CASE("family closed forms hold for n, m <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (int l = 0; l <= n + 1; ++l) {
      const auto e = family_X(n, l);
      CHECK(corner_count(e.diagram) == 2 * n + 2 - 2 * l);
      CHECK(euler_characteristic(e.diagram) == 2 + 2 * n - 2 * l);
      CHECK(total_parity(e.diagram) == expected_parity(n, l));
      CHECK(e.diagram.homologically_essential);
      CHECK(validate(e.diagram).empty());
      CHECK(e.betti == BettiNumbers{1, l, 2 * n, n, l, 1});
    }
  }
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      if (n + m < 1) {
        continue;
      }
      for (int l = 0; 2 * l <= n + m + 2; ++l) {
        const auto e = family_Y(n, m, l);
        CHECK(corner_count(e.diagram) == n + m + 2 - 2 * l);
        CHECK(total_parity(e.diagram) == expected_parity(n, l));
        CHECK(validate(e.diagram).empty());
      }
    }
  }
}

TEST_CASE("construction independence for corner sums") {
  const auto via_family = family_X(3, 0).diagram;
  const auto s = building_block("s2xs2").diagram;
  // ((s#s)#s) vs (s#(s#s)), at assorted corners.
  const auto left = corner_connected_sum(
      corner_connected_sum(s, CornerPos{0, 2}, s, CornerPos{0, 0}), CornerPos{0, 1}, s,
      CornerPos{0, 3});
  const auto inner = corner_connected_sum(s, CornerPos{0, 1}, s, CornerPos{0, 1});
  const auto right = corner_connected_sum(s, CornerPos{0, 0}, inner, CornerPos{0, 4});
  CHECK(is_isomorphic(left, via_family));
  CHECK(is_isomorphic(right, via_family));
}

TEST_CASE("verify_entry accepts the catalog") {
  for (int n = 1; n <= 6; ++n) {
    const auto e = family_X(n, 0);
    const auto report = verify_entry(e);
    CHECK(report.corner_count == 2 * n + 2);
  }
  const auto report = verify_entry(building_block("cp2bar"));
  CHECK_FALSE(report.admits_gcs_total);
  CHECK(verify_entry(building_block("cp2")).admits_gcs_total);

  for (const auto& e : standard_manifest(3, 3)) {
    CHECK_NOTHROW(verify_entry(e));
  }
}

TEST_CASE("verify_entry flags tampered entries") {
  auto tampered = family_X(1, 0);
  tampered.diagram.circles[0].component.parity *= -1;
  CHECK_THROWS_AS(verify_entry(tampered), DiscrepancyError);

  auto shrunk = family_X(1, 0);
  shrunk.diagram.circles[0].corners.pop_back();
  shrunk.diagram.circles[0].component.k -= 1;
  CHECK_THROWS_AS(verify_entry(shrunk), DiscrepancyError);

  auto invalid = family_X(1, 0);
  invalid.diagram.circles[0].corners.pop_back();  // k no longer matches
  CHECK_THROWS_AS(verify_entry(invalid), DiscrepancyError);

  auto wrong_betti = building_block("cp2");
  wrong_betti.betti.b2_plus = 0;
  CHECK_THROWS_AS(verify_entry(wrong_betti), DiscrepancyError);
}

TEST_CASE("gcs equivalence across the catalog") {
  // The total-parity criterion must match the almost-complex parity of
  // 1 - b1 + b2+ on every admissible member.
  for (int n = 0; n <= 5; ++n) {
    for (int l = 0; l <= n + 1; ++l) {
      const auto e = family_X(n, l);
      const bool even = (1 - e.betti.b1 + e.betti.b2_plus) % 2 == 0;
      CHECK(admits_stable_gcs(e.diagram, GcsMode::total) == even);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <utility>

#include "blf/chartforms.hpp"
#include "blf/errors.hpp"
#include "test_support.hpp"

using namespace blf;

namespace {

Rational rat(long long n, long long d = 1) { return Rational{n, d}; }

// Independent route to nondegeneracy: the determinant of the 4x4
// antisymmetric Gram matrix in the frame order must equal Pf^2.
Rational gram_determinant(const EllipticChartForm& w) {
  const Rational z = rat(0);
  const Rational a = w.logr1_logr2, b = w.logr1_theta1, c = w.logr1_theta2,
                 d = w.theta1_logr2, e = w.theta1_theta2, f = w.logr2_theta2;
  Rational mat[4][4] = {{z, b, a, c}, {-b, z, d, e}, {-a, -d, z, f}, {-c, -e, -f, z}};
  // cofactor expansion along the first row
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return mat[r0][c0] * (mat[r1][c1] * mat[r2][c2] - mat[r1][c2] * mat[r2][c1]) -
           mat[r0][c1] * (mat[r1][c0] * mat[r2][c2] - mat[r1][c2] * mat[r2][c0]) +
           mat[r0][c2] * (mat[r1][c0] * mat[r2][c1] - mat[r1][c1] * mat[r2][c0]);
  };
  return mat[0][0] * det3(1, 2, 3, 1, 2, 3) - mat[0][1] * det3(1, 2, 3, 0, 2, 3) +
         mat[0][2] * det3(1, 2, 3, 0, 1, 3) - mat[0][3] * det3(1, 2, 3, 0, 1, 2);
}

Rational random_rational(blf_test::Rng& rng) {
  return {rng.integer(-12, 12), rng.integer(1, 9)};
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
  CHECK(parse_rational("-3/6") == rat(-1, 2));
  CHECK(parse_rational("7") == rat(7));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(rat(1, 0), InvalidInputError);
}

TEST_CASE("standard complex-parameter form") {
  const auto wi = from_complex_parameter(rat(0), rat(1));
  CHECK(wi.logr1_logr2 == rat(1));
  CHECK(wi.theta1_theta2 == rat(-1));
  CHECK(wi.logr1_theta2 == rat(0));
  CHECK(wi.theta1_logr2 == rat(0));

  const auto w1 = from_complex_parameter(rat(1), rat(0));
  CHECK(w1.logr1_theta2 == rat(1));
  CHECK(w1.theta1_logr2 == rat(1));
  CHECK(w1.logr1_logr2 == rat(0));
  CHECK(w1.theta1_theta2 == rat(0));

  const auto zero = from_complex_parameter(rat(0), rat(0));
  CHECK(zero == EllipticChartForm{});
  CHECK_FALSE(is_nondegenerate(zero));
}

TEST_CASE("residue extraction") {
  const auto r = residues(from_complex_parameter(rat(0), rat(1)));
  CHECK(r.res_r1r2 == rat(1));
  CHECK(r.res_theta1theta2 == rat(-1));
  CHECK(r.res_q1 == rat(0));
  CHECK(r.res_q2 == rat(0));

  CHECK(residues(EllipticChartForm{}) == ResidueSet{});

  const auto gt = residues(gt_interpolation(rat(2)));
  CHECK(gt.res_r1r2 == rat(8));
  CHECK(gt.res_theta1theta2 == rat(-1));
}

TEST_CASE("elliptic residue predicate") {
  blf_test::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    CHECK(has_zero_elliptic_residue(from_complex_parameter(random_rational(rng),
                                                           random_rational(rng))));
    CHECK(has_zero_elliptic_residue(gt_interpolation(random_rational(rng))));
  }
  EllipticChartForm w;
  w.logr1_theta1 = rat(1);
  CHECK_FALSE(has_zero_elliptic_residue(w));
}

TEST_CASE("imaginary parameter") {
  CHECK(has_imaginary_parameter(from_complex_parameter(rat(0), rat(5))));
  CHECK(has_imaginary_parameter(from_complex_parameter(rat(0), rat(-2, 3))));
  CHECK_FALSE(has_imaginary_parameter(from_complex_parameter(rat(1), rat(1))));
  CHECK_FALSE(has_imaginary_parameter(gt_interpolation(rat(2))));
  // |A| == |E| alone is not enough: the cross residues must vanish too.
  CHECK_FALSE(has_imaginary_parameter(gt_interpolation(rat(1, 4))));

  EllipticChartForm w;
  w.logr1_theta1 = rat(1);
  CHECK_THROWS_AS(has_imaginary_parameter(w), InvalidInputError);
}

TEST_CASE("residue conditions for stable structures") {
  blf_test::Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const Rational re = random_rational(rng);
    const Rational im = random_rational(rng);
    const auto w = from_complex_parameter(re, im);
    CHECK(satisfies_gcs_residue_conditions(w));
    if (!(re.is_zero() && im.is_zero())) {
      CHECK(is_nondegenerate(w));
      CHECK(has_imaginary_parameter(w) == re.is_zero());
    }
  }
  CHECK_FALSE(satisfies_gcs_residue_conditions(gt_interpolation(rat(2))));
  CHECK(satisfies_gcs_residue_conditions(EllipticChartForm{}));  // degenerate but consistent
}

TEST_CASE("pfaffian agrees with the Gram determinant") {
  blf_test::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    EllipticChartForm w;
    w.logr1_logr2 = random_rational(rng);
    w.logr1_theta1 = random_rational(rng);
    w.logr1_theta2 = random_rational(rng);
    w.theta1_logr2 = random_rational(rng);
    w.theta1_theta2 = random_rational(rng);
    w.logr2_theta2 = random_rational(rng);
    const Rational pf = pfaffian(w);
    CHECK(pf * pf == gram_determinant(w));
  }
}

TEST_CASE("pfaffian closed forms") {
  blf_test::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const Rational re = random_rational(rng);
    const Rational im = random_rational(rng);
    CHECK(pfaffian(from_complex_parameter(re, im)) == re * re + im * im);
  }
  for (int i = 0; i < 100; ++i) {
    const Rational t = random_rational(rng);
    CHECK(pfaffian(gt_interpolation(t)) == rat(4) * t + rat(1));
  }
  CHECK(pfaffian(gt_interpolation(rat(0))) == rat(1));
}

TEST_CASE("pullbacks of log forms") {
  const auto w = pullback_log_form({rat(1)});
  CHECK(w.logr1_logr2 == rat(4));
  CHECK(pfaffian(w) == rat(0));
  CHECK(pullback_log_form({rat(0)}) == EllipticChartForm{});

  blf_test::Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    const Rational lambda = random_rational(rng);
    CHECK_FALSE(is_nondegenerate(pullback_log_form({lambda})));

    // Adding a fibrewise area form makes the pair symplectic: Pf = 4*lambda.
    EllipticChartForm fibre;
    fibre.theta1_theta2 = rat(-1);
    CHECK(pfaffian(pullback_log_form({lambda}) + fibre) == rat(4) * lambda);
  }
}

TEST_CASE("residues are linear") {
  blf_test::Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    const auto w1 = gt_interpolation(random_rational(rng));
    const auto w2 = from_complex_parameter(random_rational(rng), random_rational(rng));
    const Rational alpha = random_rational(rng);
    const Rational beta = random_rational(rng);
    const auto lhs = residues(alpha * w1 + beta * w2);
    const auto r1 = residues(w1);
    const auto r2 = residues(w2);
    CHECK(lhs.res_q1 == alpha * r1.res_q1 + beta * r2.res_q1);
    CHECK(lhs.res_q2 == alpha * r1.res_q2 + beta * r2.res_q2);
    CHECK(lhs.res_r1r2 == alpha * r1.res_r1r2 + beta * r2.res_r1r2);
    CHECK(lhs.res_theta1theta2 == alpha * r1.res_theta1theta2 + beta * r2.res_theta1theta2);
    CHECK(lhs.res_r1theta2 == alpha * r1.res_r1theta2 + beta * r2.res_r1theta2);
    CHECK(lhs.res_theta1r2 == alpha * r1.res_theta1r2 + beta * r2.res_theta1r2);
  }
}

TEST_CASE("corner-sum gluing model") {
  const auto report = verify_corner_sum_model(1000, 7);
  CHECK(report.pass);
  CHECK(report.max_error < 1e-12);
  CHECK(report.samples == 1000);
  CHECK_THROWS_AS(verify_corner_sum_model(0, 7), InvalidInputError);

  // Exact spot checks of the identity at simple points.
  auto p_after_phi = [](double re1, double im1, double re2, double im2) {
    const double norm2 = re1 * re1 + im1 * im1 + re2 * re2 + im2 * im2;
    const double x = (re2 * re2 + im2 * im2) / (norm2 * norm2);
    const double y = (re1 * re1 + im1 * im1) / (norm2 * norm2);
    return std::pair<double, double>{x, y};
  };
  auto psi_after_p = [](double re1, double im1, double re2, double im2) {
    const double x = re1 * re1 + im1 * im1;
    const double y = re2 * re2 + im2 * im2;
    const double s2 = (x + y) * (x + y);
    return std::pair<double, double>{y / s2, x / s2};
  };
  // z = (1,0): both routes give (0,1).
  CHECK(p_after_phi(1, 0, 0, 0) == std::pair<double, double>{0.0, 1.0});
  CHECK(psi_after_p(1, 0, 0, 0) == std::pair<double, double>{0.0, 1.0});
  // On the unit sphere the gluing map is swap-and-conjugate: exact swap.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto lhs = p_after_phi(inv_sqrt2, 0, 0, inv_sqrt2);
  const auto rhs = psi_after_p(inv_sqrt2, 0, 0, inv_sqrt2);
  CHECK(lhs.first == doctest::Approx(rhs.first).epsilon(1e-15));
  CHECK(lhs.second == doctest::Approx(rhs.second).epsilon(1e-15));
}

TEST_CASE("focus-focus coordinate model") {
  const auto report = verify_focus_focus_model(1000, 7);
  CHECK(report.pass);
  CHECK(report.max_error < 1e-12);
  // The alternative published substitution does not satisfy the identity;
  // the verifier reports it rather than asserting it.
  CHECK(report.has_variant);
  CHECK_FALSE(report.variant_pass);

  // Spot values of the map (x1 y2 - x2 y1, x1 x2 + y1 y2).
  auto map = [](double x1, double y1, double x2, double y2) {
    return std::pair<double, double>{x1 * y2 - x2 * y1, x1 * x2 + y1 * y2};
  };
  auto via_w = [](double x1, double y1, double x2, double y2) {
    const std::complex<double> z1(x1, y1), z2(x2, y2);
    const std::complex<double> w1 = (std::conj(z1) + z2) * 0.5;
    const std::complex<double> w2 = (std::conj(z1) - z2) * std::complex<double>(0.0, -0.5);
    const auto q = w1 * w1 + w2 * w2;
    return std::pair<double, double>{q.imag(), q.real()};
  };
  CHECK(map(1, 0, 0, 0) == std::pair<double, double>{0.0, 0.0});
  CHECK(via_w(1, 0, 0, 0) == std::pair<double, double>{0.0, 0.0});
  CHECK(map(1, 0, 1, 0) == std::pair<double, double>{0.0, 1.0});
  CHECK(via_w(1, 0, 1, 0) == std::pair<double, double>{0.0, 1.0});
}

TEST_CASE("model verifiers are reproducible for a fixed seed") {
  const auto a = verify_corner_sum_model(500, 42);
  const auto b = verify_corner_sum_model(500, 42);
  CHECK(a.max_error == b.max_error);
  const auto c = verify_focus_focus_model(500, 42);
  const auto d = verify_focus_focus_model(500, 42);
  CHECK(c.max_error == d.max_error);
  CHECK(c.variant_max_error == d.variant_max_error);
}

#include "blf/chartforms.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>

#include "blf/errors.hpp"

namespace blf {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) {
    throw InvalidInputError("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(std::llabs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational x, Rational y) {
  const long long g = std::gcd(x.den, y.den);
  const long long yd = y.den / g;
  return {x.num * yd + y.num * (x.den / g), x.den * yd};
}

Rational operator-(Rational x, Rational y) { return x + (-y); }

Rational operator*(Rational x, Rational y) {
  const long long g1 = std::gcd(std::llabs(x.num), y.den);
  const long long g2 = std::gcd(std::llabs(y.num), x.den);
  return {(x.num / g1) * (y.num / g2), (x.den / g2) * (y.den / g1)};
}

Rational operator/(Rational x, Rational y) {
  if (y.num == 0) {
    throw InvalidInputError("Rational: division by zero");
  }
  return x * Rational{y.den, y.num};
}

std::string Rational::str() const {
  if (den == 1) {
    return std::to_string(num);
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return {std::stoll(text), 1};
    }
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

EllipticChartForm operator+(const EllipticChartForm& w1, const EllipticChartForm& w2) {
  return {w1.logr1_logr2 + w2.logr1_logr2,   w1.logr1_theta1 + w2.logr1_theta1,
          w1.logr1_theta2 + w2.logr1_theta2, w1.theta1_logr2 + w2.theta1_logr2,
          w1.theta1_theta2 + w2.theta1_theta2, w1.logr2_theta2 + w2.logr2_theta2};
}

EllipticChartForm operator*(Rational s, const EllipticChartForm& w) {
  return {s * w.logr1_logr2,   s * w.logr1_theta1,  s * w.logr1_theta2,
          s * w.theta1_logr2,  s * w.theta1_theta2, s * w.logr2_theta2};
}

EllipticChartForm from_complex_parameter(Rational tau_re, Rational tau_im) {
  EllipticChartForm w;
  w.logr1_logr2 = tau_im;
  w.theta1_theta2 = -tau_im;
  w.logr1_theta2 = tau_re;
  w.theta1_logr2 = tau_re;
  return w;
}

ResidueSet residues(const EllipticChartForm& w) {
  return {w.logr1_theta1, w.logr2_theta2, w.logr1_logr2,
          w.theta1_theta2, w.logr1_theta2, w.theta1_logr2};
}

bool has_zero_elliptic_residue(const EllipticChartForm& w) {
  return w.logr1_theta1.is_zero() && w.logr2_theta2.is_zero();
}

bool has_imaginary_parameter(const EllipticChartForm& w) {
  if (!has_zero_elliptic_residue(w)) {
    throw InvalidInputError("has_imaginary_parameter: form has nonzero elliptic residue");
  }
  return w.logr1_logr2.abs() == w.theta1_theta2.abs() &&
         w.logr1_theta2.is_zero() && w.theta1_logr2.is_zero();
}

bool satisfies_gcs_residue_conditions(const EllipticChartForm& w) {
  return has_zero_elliptic_residue(w) && w.theta1_logr2 == w.logr1_theta2 &&
         w.logr1_logr2 == -w.theta1_theta2;
}

Rational pfaffian(const EllipticChartForm& w) {
  return w.logr1_theta1 * w.logr2_theta2 - w.logr1_logr2 * w.theta1_theta2 +
         w.logr1_theta2 * w.theta1_logr2;
}

bool is_nondegenerate(const EllipticChartForm& w) { return !pfaffian(w).is_zero(); }

EllipticChartForm gt_interpolation(Rational t) {
  EllipticChartForm w;
  w.logr1_logr2 = Rational{4} * t;
  w.theta1_theta2 = Rational{-1};
  w.logr1_theta2 = Rational{1};
  w.theta1_logr2 = Rational{1};
  return w;
}

EllipticChartForm pullback_log_form(const LogChartForm& lf) {
  EllipticChartForm w;
  w.logr1_logr2 = Rational{4} * lf.lambda;
  return w;
}

namespace {

// Deterministic uniform doubles from raw mt19937_64 bits; avoids the
// implementation-defined std::uniform_real_distribution sequences.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  double unit() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t z = state_;
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace

ModelCheckReport verify_corner_sum_model(int sample_count, std::uint64_t seed,
                                         double tolerance) {
  if (sample_count < 1) {
    throw InvalidInputError("verify_corner_sum_model: sample_count must be >= 1");
  }
  SampleStream rng(seed);
  ModelCheckReport report;
  report.op = "corner_sum_model";
  report.samples = sample_count;
  for (int i = 0; i < sample_count; ++i) {
    std::complex<double> z1, z2;
    double norm2 = 0.0;
    do {
      z1 = {rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)};
      z2 = {rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)};
      norm2 = std::norm(z1) + std::norm(z2);
    } while (norm2 < 0.3 || norm2 > 3.9);  // stay inside the gluing annulus

    const std::complex<double> f1 = z2 / norm2;
    const std::complex<double> f2 = std::conj(z1) / norm2;
    const double lhs_x = std::norm(f1);
    const double lhs_y = std::norm(f2);

    const double x = std::norm(z1);
    const double y = std::norm(z2);
    const double s2 = (x + y) * (x + y);
    const double rhs_x = y / s2;
    const double rhs_y = x / s2;

    const double err = std::max(std::fabs(lhs_x - rhs_x), std::fabs(lhs_y - rhs_y));
    report.max_error = std::max(report.max_error, err);
  }
  report.pass = report.max_error < tolerance;
  return report;
}

ModelCheckReport verify_focus_focus_model(int sample_count, std::uint64_t seed,
                                          double tolerance) {
  if (sample_count < 1) {
    throw InvalidInputError("verify_focus_focus_model: sample_count must be >= 1");
  }
  SampleStream rng(seed);
  ModelCheckReport report;
  report.op = "focus_focus_model";
  report.samples = sample_count;
  report.has_variant = true;
  const std::complex<double> half_i(0.0, 0.5);
  for (int i = 0; i < sample_count; ++i) {
    const double x1 = rng.range(-2.0, 2.0);
    const double y1 = rng.range(-2.0, 2.0);
    const double x2 = rng.range(-2.0, 2.0);
    const double y2 = rng.range(-2.0, 2.0);

    const double map_x = x1 * y2 - x2 * y1;
    const double map_y = x1 * x2 + y1 * y2;

    const std::complex<double> z1(x1, y1), z2(x2, y2);
    const std::complex<double> w1 = (std::conj(z1) + z2) * 0.5;
    const std::complex<double> w2 = (std::conj(z1) - z2) * (-half_i);  // /(2i)
    const std::complex<double> q = w1 * w1 + w2 * w2;
    const double err = std::max(std::fabs(q.imag() - map_x), std::fabs(q.real() - map_y));
    report.max_error = std::max(report.max_error, err);

    const std::complex<double> v1(0.25 * (x1 + y2), 0.25 * (x1 - y2));
    const std::complex<double> v2(0.25 * (x1 - y2), 0.25 * (x1 + y2));
    const std::complex<double> qv = v1 * v1 + v2 * v2;
    const double verr = std::max(std::fabs(qv.imag() - map_x), std::fabs(qv.real() - map_y));
    report.variant_max_error = std::max(report.variant_max_error, verr);
  }
  report.pass = report.max_error < tolerance;
  report.variant_pass = report.variant_max_error < tolerance;
  return report;
}

}  // namespace blf

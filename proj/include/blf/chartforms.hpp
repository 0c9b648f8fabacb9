#ifndef BLF_CHARTFORMS_HPP
#define BLF_CHARTFORMS_HPP

// Residue calculus for constant-coefficient elliptic 2-forms in the
// standard chart at a double point of the degeneracy locus. The chart
// frame is ordered (dlog r1, dtheta1, dlog r2, dtheta2) and a form is
//
//   A dlog r1 ^ dlog r2  +  B dlog r1 ^ dtheta1  +  C dlog r1 ^ dtheta2
// + D dtheta1 ^ dlog r2  +  E dtheta1 ^ dtheta2  +  F dlog r2 ^ dtheta2.
//
// Coefficient algebra is exact rational; the two sample-based model
// verifiers are the only floating-point code here.

#include <cstdint>
#include <string>

namespace blf {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);

  Rational operator-() const { return {-num, den}; }
  friend Rational operator+(Rational x, Rational y);
  friend Rational operator-(Rational x, Rational y);
  friend Rational operator*(Rational x, Rational y);
  friend Rational operator/(Rational x, Rational y);
  friend bool operator==(const Rational&, const Rational&) = default;

  bool is_zero() const { return num == 0; }
  Rational abs() const { return {num < 0 ? -num : num, den}; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

Rational parse_rational(const std::string& text);

struct EllipticChartForm {
  Rational logr1_logr2;    // A
  Rational logr1_theta1;   // B
  Rational logr1_theta2;   // C
  Rational theta1_logr2;   // D
  Rational theta1_theta2;  // E
  Rational logr2_theta2;   // F

  friend bool operator==(const EllipticChartForm&, const EllipticChartForm&) = default;
};

EllipticChartForm operator+(const EllipticChartForm& w1, const EllipticChartForm& w2);
EllipticChartForm operator*(Rational s, const EllipticChartForm& w);

// lambda dlog x1 ^ dlog x2 on the base chart.
struct LogChartForm {
  Rational lambda;
};

struct ResidueSet {
  Rational res_q1;            // elliptic residue on the first strand  (B)
  Rational res_q2;            // elliptic residue on the second strand (F)
  Rational res_r1r2;          // A
  Rational res_theta1theta2;  // E
  Rational res_r1theta2;      // C
  Rational res_theta1r2;      // D

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

// Chart normal form of the standard stable structure with complex
// parameter tau = tau_re + i tau_im:
//   Im(tau)(dlog r1^dlog r2 - dtheta1^dtheta2)
// + Re(tau)(dlog r1^dtheta2 + dtheta1^dlog r2).
EllipticChartForm from_complex_parameter(Rational tau_re, Rational tau_im);

ResidueSet residues(const EllipticChartForm& w);

// B == 0 and F == 0.
bool has_zero_elliptic_residue(const EllipticChartForm& w);

// |A| == |E| and C == D == 0. Requires zero elliptic residue; throws
// InvalidInputError otherwise.
bool has_imaginary_parameter(const EllipticChartForm& w);

// B == F == 0, D == C, A == -E: the residue conditions under which an
// elliptic symplectic form induces a stable generalized complex structure.
bool satisfies_gcs_residue_conditions(const EllipticChartForm& w);

// Pfaffian in the fixed frame order: B*F - A*E + C*D.
Rational pfaffian(const EllipticChartForm& w);

bool is_nondegenerate(const EllipticChartForm& w);

// The fibrewise form -dtheta1^dtheta2 + dlog r1^dtheta2 + dtheta1^dlog r2
// plus t times the pullback of dlog x1 ^ dlog x2 (the pullback doubles each
// dlog, so A = 4t). Pf = 4t + 1; fails the imaginary-parameter test for
// every t except that C, D never vanish, so in fact for every t.
EllipticChartForm gt_interpolation(Rational t);

// Pullback of lambda dlog x1 ^ dlog x2 along (z1,z2) -> (|z1|^2,|z2|^2):
// A = 4 lambda, everything else zero. Always degenerate on the chart.
EllipticChartForm pullback_log_form(const LogChartForm& lf);

struct ModelCheckReport {
  std::string op;
  int samples = 0;
  double max_error = 0.0;
  bool pass = false;
  // Focus-focus only: same identity attempted with the alternative
  // published coordinate change; reported, not asserted.
  bool has_variant = false;
  double variant_max_error = 0.0;
  bool variant_pass = false;
};

// Checks p(Phi(z)) == Psi(p(z)) on seeded pseudo-random points of the
// annulus 1/2 <= |z| <= 2, where p(z1,z2) = (|z1|^2,|z2|^2),
// Phi(z1,z2) = (z2, conj(z1)) / (|z1|^2+|z2|^2) and
// Psi(x,y) = (y,x) / (x+y)^2.
ModelCheckReport verify_corner_sum_model(int sample_count, std::uint64_t seed,
                                         double tolerance = 1e-12);

// Checks that (x1 y2 - x2 y1, x1 x2 + y1 y2) equals (Im, Re) of
// w1^2 + w2^2 under w1 = (conj(z1)+z2)/2, w2 = (conj(z1)-z2)/(2i).
// Also evaluates the variant substitution
// (w1,w2) = (x1+y2+i(x1-y2), x1-y2+i(x1+y2))/4 and reports whether it
// satisfies the same identity.
ModelCheckReport verify_focus_focus_model(int sample_count, std::uint64_t seed,
                                          double tolerance = 1e-12);

}  // namespace blf

#endif

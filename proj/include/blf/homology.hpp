#ifndef BLF_HOMOLOGY_HPP
#define BLF_HOMOLOGY_HPP

// Exact integer arithmetic for the first homology of a torus fibre:
// primitive cycles, Dehn twists, dual pairs and mapping-class composition.
// Cycles live in Z^2 with respect to a fixed basis of angular generators;
// mapping classes are 2x2 integer matrices of determinant 1.

#include <array>
#include <cstdint>

namespace blf {

struct Cycle {
  long long a = 0;
  long long b = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Sign normal form: first nonzero coordinate made positive. Vanishing
// cycles are only defined up to sign, so equality and dual-pair tests go
// through this.
Cycle normalized(Cycle c);

bool same_cycle_up_to_sign(Cycle c1, Cycle c2);

// x_a*c_b - x_b*c_a, the algebraic intersection number of x with c.
long long cycle_det(Cycle x, Cycle c);

// True iff gcd(|a|,|b|) == 1. Throws InvalidInputError on the zero cycle.
bool is_primitive(Cycle c);

struct MappingClass {
  // Row-major: [[m[0], m[1]], [m[2], m[3]]].
  std::array<long long, 4> m{1, 0, 0, 1};

  long long det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend bool operator==(const MappingClass&, const MappingClass&) = default;
};

MappingClass identity_class();

// Positive Dehn twist about a primitive cycle c:  T_c(x) = x + det(x|c) c.
// Throws InvalidInputError if c is not primitive.
MappingClass dehn_twist(Cycle c);

// Matrix product m1*m2. Determinant 1 is preserved.
MappingClass compose(const MappingClass& m1, const MappingClass& m2);

MappingClass inverse(const MappingClass& m);

// Matrix-vector product.
Cycle apply(const MappingClass& m, Cycle c);

// Two primitive cycles generate H_1 of the torus iff |det(c1|c2)| == 1.
// Throws InvalidInputError on non-primitive input.
bool is_dual_pair(Cycle c1, Cycle c2);

}  // namespace blf

#endif

#include "blf/homology.hpp"

#include <cstdlib>
#include <numeric>

#include "blf/errors.hpp"

namespace blf {

Cycle normalized(Cycle c) {
  if (c.a < 0 || (c.a == 0 && c.b < 0)) {
    return {-c.a, -c.b};
  }
  return c;
}

bool same_cycle_up_to_sign(Cycle c1, Cycle c2) {
  return normalized(c1) == normalized(c2);
}

long long cycle_det(Cycle x, Cycle c) { return x.a * c.b - x.b * c.a; }

bool is_primitive(Cycle c) {
  if (c.a == 0 && c.b == 0) {
    throw InvalidInputError("is_primitive: zero cycle");
  }
  return std::gcd(std::llabs(c.a), std::llabs(c.b)) == 1;
}

MappingClass identity_class() { return MappingClass{}; }

MappingClass dehn_twist(Cycle c) {
  if (!is_primitive(c)) {
    throw InvalidInputError("dehn_twist: cycle must be primitive");
  }
  // Columns are T_c(e1) and T_c(e2).
  return MappingClass{{1 + c.a * c.b, -c.a * c.a, c.b * c.b, 1 - c.a * c.b}};
}

MappingClass compose(const MappingClass& m1, const MappingClass& m2) {
  return MappingClass{{m1.m[0] * m2.m[0] + m1.m[1] * m2.m[2],
                       m1.m[0] * m2.m[1] + m1.m[1] * m2.m[3],
                       m1.m[2] * m2.m[0] + m1.m[3] * m2.m[2],
                       m1.m[2] * m2.m[1] + m1.m[3] * m2.m[3]}};
}

MappingClass inverse(const MappingClass& m) {
  // det == 1, so the adjugate is the inverse.
  return MappingClass{{m.m[3], -m.m[1], -m.m[2], m.m[0]}};
}

Cycle apply(const MappingClass& m, Cycle c) {
  return {m.m[0] * c.a + m.m[1] * c.b, m.m[2] * c.a + m.m[3] * c.b};
}

bool is_dual_pair(Cycle c1, Cycle c2) {
  if (!is_primitive(c1) || !is_primitive(c2)) {
    throw InvalidInputError("is_dual_pair: cycles must be primitive");
  }
  const long long d = cycle_det(c1, c2);
  return d == 1 || d == -1;
}

}  // namespace blf

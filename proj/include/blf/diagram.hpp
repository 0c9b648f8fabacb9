#ifndef BLF_DIAGRAM_HPP
#define BLF_DIAGRAM_HPP

// Combinatorial base diagrams for boundary Lefschetz fibrations on oriented
// 4-manifolds, and the surgery calculus on them.
//
// A diagram records the base surface (genus plus boundary circles), one
// divisor component per boundary circle, the Lefschetz points in the
// interior, and the two flags that feed the existence criteria. A circle
// with k >= 1 corners carries a necklace of k spheres; a cornerless circle
// carries a smooth component, a torus when co-orientable (parity +1) and a
// Klein bottle otherwise (parity -1).
//
// Parity bookkeeping follows fixed rules:
//  * two-diagram corner sum: the merged component gets -e1*e2;
//  * self-sum at corners of different circles: same rule, genus grows by 1;
//  * self-sum at two corners of one circle: the circle splits in two along
//    the corner positions and the two new components have parity product -1.
//    Which piece receives +1 is a convention: the piece whose parity-free
//    canonical form (corner count) is smaller gets +1; on a tie the first
//    piece (corners strictly after ref1 up to ref2 in cyclic order) gets +1.
//  * both singularity trades preserve the component parity.
//
// Per-corner intersection indices are never stored; parity is tracked per
// component as an aggregate and updated only by these rules.
//
// All operations return new diagrams; nothing here mutates shared state.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "blf/homology.hpp"

namespace blf {

enum class ComponentKind { necklace, torus, klein_bottle };

std::string kind_name(ComponentKind kind);

struct DivisorComponent {
  ComponentKind kind = ComponentKind::necklace;
  int k = 0;        // sphere count; meaningful for necklaces only
  int parity = +1;  // +1 or -1
};

struct BoundaryCircle {
  std::vector<std::string> corners;  // cyclically ordered corner ids
  bool coorientable = true;          // meaningful only when corners is empty
  DivisorComponent component;
};

struct LefschetzPoint {
  std::string id;
  std::optional<Cycle> cycle;            // vanishing cycle, if recorded
  std::optional<std::string> basis_tag;  // chart basis the cycle refers to
};

struct FibrationDiagram {
  int genus = 0;
  std::vector<BoundaryCircle> circles;
  std::vector<LefschetzPoint> lefschetz;
  bool homologically_essential = true;
  bool fibres_connected = true;
  bool oriented = true;
  nlohmann::json history;  // list of operation records, provenance only

  FibrationDiagram();
};

// A corner is addressed either by its id or by (circle index, position).
struct CornerPos {
  int circle = 0;
  int position = 0;
};
using CornerRef = std::variant<std::string, CornerPos>;

// Resolves to (circle, position); throws RefError if it does not resolve
// (unknown id, index out of range, or a position on a cornerless circle).
CornerPos resolve_corner(const FibrationDiagram& d, const CornerRef& ref);

// Textual corner ref: a non-negative integer indexes the diagram's corners
// flattened in circle order, anything else is taken as a corner id.
CornerRef corner_ref_from_token(const FibrationDiagram& d, const std::string& token);

std::vector<std::string> validate(const FibrationDiagram& d);

// Throws ValidationError when validate(d) is non-empty.
void require_valid(const FibrationDiagram& d);

int corner_count(const FibrationDiagram& d);
int lefschetz_count(const FibrationDiagram& d);

// chi of the total space: corner count plus Lefschetz count.
long long euler_characteristic(const FibrationDiagram& d);

// Product of the component parities; +1 for an empty divisor.
int total_parity(const FibrationDiagram& d);

// 2 - 2g - (#circles), the log Euler characteristic of the base.
int base_euler_characteristic(const FibrationDiagram& d);

bool admits_elliptic_symplectic(const FibrationDiagram& d);

enum class GcsMode { per_component, total };

bool admits_stable_gcs(const FibrationDiagram& d, GcsMode mode);

FibrationDiagram corner_connected_sum(const FibrationDiagram& d1, const CornerRef& ref1,
                                      const FibrationDiagram& d2, const CornerRef& ref2);

FibrationDiagram self_connected_sum(const FibrationDiagram& d, const CornerRef& ref1,
                                    const CornerRef& ref2);

// Removes the corner and adds one Lefschetz point. When record_cycle is
// set, the new point carries cycle (1,1) in a fresh basis tag, in which the
// adjacent elliptic vanishing cycle reads (1,0); the two form a dual pair.
FibrationDiagram trade_corner_to_lefschetz(const FibrationDiagram& d, const CornerRef& ref,
                                           bool record_cycle = true);

struct DualPairEvidence {
  std::optional<Cycle> lefschetz_cycle;
  std::optional<Cycle> elliptic_cycle;
  std::optional<std::string> basis_tag;
  bool asserted = false;  // explicit caller assertion, skips the cycle check

  static DualPairEvidence assertion() { return DualPairEvidence{{}, {}, {}, true}; }
  static DualPairEvidence cycles(Cycle lef, Cycle ell, std::string tag) {
    return DualPairEvidence{lef, ell, std::move(tag), false};
  }
};

// Removes the Lefschetz point and adds one corner to the given circle.
// Cycle evidence is only accepted in the basis tag recorded on the point;
// cross-basis comparison is refused.
FibrationDiagram trade_lefschetz_to_corner(const FibrationDiagram& d,
                                           const std::string& lefschetz_ref, int circle_ref,
                                           const DualPairEvidence& evidence);

// Normal form: circles sorted by (corner count, parity, kind), ids and
// basis tags relabelled positionally, Lefschetz cycles sign-normalized.
// Idempotent. History is carried through untouched and is ignored by
// isomorphism tests.
FibrationDiagram canonical_form(const FibrationDiagram& d);

bool is_isomorphic(const FibrationDiagram& d1, const FibrationDiagram& d2);

}  // namespace blf

#endif

#ifndef BLF_CATALOG_HPP
#define BLF_CATALOG_HPP

// Catalog of base diagrams: the torus-action building blocks, the two
// connected-sum example families, and an invariant cross-checker that
// verifies diagram-derived quantities against closed-form expectations.

#include <string>
#include <vector>

#include "blf/diagram.hpp"

namespace blf {

struct BettiNumbers {
  long long b0 = 1;
  long long b1 = 0;
  long long b2 = 0;
  long long b2_plus = 0;
  long long b3 = 0;
  long long b4 = 1;

  long long chi() const { return b0 - b1 + b2 - b3 + b4; }

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

struct CatalogEntry {
  std::string name;
  FibrationDiagram diagram;
  BettiNumbers betti;
};

struct InvariantReport {
  long long chi = 0;
  int corner_count = 0;
  int lefschetz_count = 0;
  int total_parity = +1;
  bool admits_gcs_total = false;
  bool admits_gcs_per_component = false;
};

// Diagram-derived invariants only; no closed forms involved.
InvariantReport compute_invariants(const FibrationDiagram& d);

// name in {cp2, cp2bar, s2xs2, s4, s3xs1_disk, s3xs1_annulus}.
// Throws InvalidInputError on unknown names.
CatalogEntry building_block(const std::string& name);

// Circle-bundle blocks: genus-g base with h cornerless boundary circles,
// h torus components. Requires 2g + h >= 2.
CatalogEntry sphere_bundle_family(int g, int h);

// #n(S2xS2) # l(S1xS3). Admissible iff l <= n+1 (chi = 2+2n-2l >= 0);
// otherwise throws InadmissibleError carrying chi.
CatalogEntry family_X(int n, int l);

// #n CP2 # m CP2bar # l(S1xS3), n+m >= 1. Admissible iff
// 2l <= n+m+2 (chi = 2+n+m-2l >= 0).
CatalogEntry family_Y(int n, int m, int l);

// Recomputes every invariant from the entry's diagram and compares with
// the closed-form data. Throws DiscrepancyError naming the first failing
// invariant; otherwise returns the diagram-derived report.
InvariantReport verify_entry(const CatalogEntry& e);

// All fixed blocks, a few circle-bundle blocks, and every admissible
// family member with n <= n_max, m <= m_max.
std::vector<CatalogEntry> standard_manifest(int n_max = 6, int m_max = 6);

}  // namespace blf

#endif

#include "blf/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "blf/errors.hpp"

namespace blf {

using nlohmann::json;

namespace {

FibrationDiagram block_diagram(const std::string& name, int genus,
                               const std::vector<std::pair<int, int>>& circles) {
  FibrationDiagram d;
  d.genus = genus;
  int next = 0;
  for (const auto& [k, parity] : circles) {
    BoundaryCircle c;
    for (int i = 0; i < k; ++i) {
      c.corners.push_back("k" + std::to_string(next++));
    }
    if (k > 0) {
      c.component = {ComponentKind::necklace, k, parity};
      c.coorientable = true;
    } else {
      c.component = {parity == +1 ? ComponentKind::torus : ComponentKind::klein_bottle, 0,
                     parity};
      c.coorientable = parity == +1;
    }
    d.circles.push_back(std::move(c));
  }
  json rec = json::object();
  rec["op"] = "building_block";
  rec["name"] = name;
  d.history.push_back(std::move(rec));
  require_valid(d);
  return d;
}

// ---------------------------------------------------------------------
// Family construction planner.
//
// Corner counts and Euler characteristics are order-independent, but the
// family parity formula (-1)^(n-1+l) is only reachable when every
// self-sum flips the total parity. A self-sum flips it unless it splits
// a parity -1 component, so the planner searches for a surgery order in
// which no -1 component is ever split, interleaving the last block of
// the assembly between self-sums when necessary. Members whose block set
// has no +1 block at all (n = 0 with l >= 1) cannot be reached this way
// at all and are constructed directly from their known geometric
// descriptions instead.
// ---------------------------------------------------------------------

struct PlanMove {
  enum class Kind { split, merge, holdout };
  Kind kind;
  int i = 0;    // circle index into the sorted cornered-circle list
  int j = 0;    // second circle for merges
  int arc = 0;  // piece1 corner count for splits
};

using PlanCircle = std::pair<int, int>;  // (corners, parity), parity +1 sorts first

std::vector<PlanCircle> sorted_state(std::vector<PlanCircle> circles) {
  std::sort(circles.begin(), circles.end(), [](PlanCircle a, PlanCircle b) {
    return std::make_pair(a.first, -a.second) < std::make_pair(b.first, -b.second);
  });
  return circles;
}

std::string state_key(const std::vector<PlanCircle>& circles, int left, bool holdout) {
  std::string key = std::to_string(left) + (holdout ? "H" : "-");
  for (const auto& [k, p] : circles) {
    key += "|" + std::to_string(k) + (p > 0 ? "+" : "-");
  }
  return key;
}

bool find_plan(const std::vector<PlanCircle>& state, int left, bool holdout, int holdout_k,
               std::vector<PlanMove>& plan, std::set<std::string>& dead) {
  if (left == 0 && !holdout) {
    return true;
  }
  const std::string key = state_key(state, left, holdout);
  if (dead.count(key)) {
    return false;
  }
  const int n = static_cast<int>(state.size());

  auto child = [&](std::vector<PlanCircle> next, int drop1, int drop2) {
    std::vector<PlanCircle> out;
    for (int i = 0; i < n; ++i) {
      if (i != drop1 && i != drop2) {
        out.push_back(state[i]);
      }
    }
    for (const auto& c : next) {
      if (c.first > 0) {
        out.push_back(c);  // cornerless results never participate again
      }
    }
    return sorted_state(std::move(out));
  };

  if (left > 0) {
    // Merges: any two cornered circles; parity -e1*e2, always a flip.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto next = child({{state[i].first + state[j].first - 2,
                            -state[i].second * state[j].second}},
                          i, j);
        plan.push_back({PlanMove::Kind::merge, i, j, 0});
        if (find_plan(next, left - 1, holdout, holdout_k, plan, dead)) {
          return true;
        }
        plan.pop_back();
      }
    }
    // Splits: only +1 circles flip; the smaller piece receives +1.
    for (int i = 0; i < n; ++i) {
      if (state[i].second != +1 || state[i].first < 2) {
        continue;
      }
      const int budget = state[i].first - 2;
      for (int a = budget / 2; a >= 0; --a) {
        auto next = child({{a, +1}, {budget - a, -1}}, i, -1);
        plan.push_back({PlanMove::Kind::split, i, 0, a});
        if (find_plan(next, left - 1, holdout, holdout_k, plan, dead)) {
          return true;
        }
        plan.pop_back();
      }
    }
  }
  if (holdout) {
    // Corner-sum the held-back +1 block into any cornered circle.
    for (int i = 0; i < n; ++i) {
      auto next = child({{state[i].first + holdout_k - 2, -state[i].second}}, i, -1);
      plan.push_back({PlanMove::Kind::holdout, i, 0, 0});
      if (find_plan(next, left, false, holdout_k, plan, dead)) {
        return true;
      }
      plan.pop_back();
    }
  }
  dead.insert(key);
  return false;
}

// Indices of cornered circles in the live diagram, in planner order.
std::vector<int> live_order(const FibrationDiagram& d) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(d.circles.size()); ++i) {
    if (!d.circles[i].corners.empty()) {
      idx.push_back(i);
    }
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& ca = d.circles[a];
    const auto& cb = d.circles[b];
    return std::make_pair(static_cast<int>(ca.corners.size()), -ca.component.parity) <
           std::make_pair(static_cast<int>(cb.corners.size()), -cb.component.parity);
  });
  return idx;
}

FibrationDiagram assemble_blocks(const std::vector<FibrationDiagram>& blocks) {
  FibrationDiagram d = blocks.front();
  for (size_t i = 1; i < blocks.size(); ++i) {
    d = corner_connected_sum(d, CornerPos{0, 0}, blocks[i], CornerPos{0, 0});
  }
  return d;
}

FibrationDiagram build_by_plan(std::vector<FibrationDiagram> blocks, bool use_holdout,
                               int selfsums, const std::string& what) {
  FibrationDiagram holdout_block;
  if (use_holdout) {
    holdout_block = blocks.back();
    blocks.pop_back();
  }
  FibrationDiagram d = assemble_blocks(blocks);

  std::vector<PlanCircle> state;
  for (int i : live_order(d)) {
    state.emplace_back(static_cast<int>(d.circles[i].corners.size()),
                       d.circles[i].component.parity);
  }
  const int holdout_k = use_holdout ? corner_count(holdout_block) : 0;
  std::vector<PlanMove> plan;
  std::set<std::string> dead;
  if (!find_plan(state, selfsums, use_holdout, holdout_k, plan, dead)) {
    throw Error("no parity-flipping surgery plan for " + what);
  }

  for (const auto& move : plan) {
    const auto order = live_order(d);
    switch (move.kind) {
      case PlanMove::Kind::split:
        d = self_connected_sum(d, CornerPos{order[move.i], 0},
                               CornerPos{order[move.i], move.arc + 1});
        break;
      case PlanMove::Kind::merge:
        d = self_connected_sum(d, CornerPos{order[move.i], 0}, CornerPos{order[move.j], 0});
        break;
      case PlanMove::Kind::holdout:
        d = corner_connected_sum(d, CornerPos{order[move.i], 0}, holdout_block,
                                 CornerPos{0, 0});
        break;
    }
  }
  return d;
}

// Known-good diagram for family members that no surgery order reaches:
// base of genus l/2 with one or two boundary circles, matching the base
// bookkeeping of an l-step surgery sequence (base chi = 1 - l).
FibrationDiagram direct_family_diagram(const std::string& name, int corners,
                                       int target_parity, int l) {
  const int genus = l / 2;
  const bool two_circles = (l % 2) == 1;
  std::vector<std::pair<int, int>> circles;
  if (corners >= 1) {
    circles.emplace_back(corners, target_parity);
    if (two_circles) {
      circles.emplace_back(0, +1);
    }
  } else if (two_circles) {
    circles.emplace_back(0, +1);
    circles.emplace_back(0, target_parity);
  } else {
    circles.emplace_back(0, target_parity);
  }
  FibrationDiagram d = block_diagram(name, genus, circles);
  d.history.back()["op"] = "direct_construction";
  return d;
}

int parity_pow(int exponent) { return (exponent % 2 + 2) % 2 == 0 ? +1 : -1; }

}  // namespace

InvariantReport compute_invariants(const FibrationDiagram& d) {
  require_valid(d);
  InvariantReport r;
  r.chi = euler_characteristic(d);
  r.corner_count = corner_count(d);
  r.lefschetz_count = lefschetz_count(d);
  r.total_parity = total_parity(d);
  r.admits_gcs_total = admits_stable_gcs(d, GcsMode::total);
  r.admits_gcs_per_component = admits_stable_gcs(d, GcsMode::per_component);
  return r;
}

CatalogEntry building_block(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "cp2") {
    e.diagram = block_diagram(name, 0, {{3, +1}});
    e.betti = {1, 0, 1, 1, 0, 1};
  } else if (name == "cp2bar") {
    e.diagram = block_diagram(name, 0, {{3, -1}});
    e.betti = {1, 0, 1, 0, 0, 1};
  } else if (name == "s2xs2") {
    e.diagram = block_diagram(name, 0, {{4, +1}});
    e.betti = {1, 0, 2, 1, 0, 1};
  } else if (name == "s4") {
    e.diagram = block_diagram(name, 0, {{2, -1}});
    e.betti = {1, 0, 0, 0, 0, 1};
  } else if (name == "s3xs1_disk") {
    e.diagram = block_diagram(name, 0, {{0, +1}});
    e.betti = {1, 1, 0, 0, 1, 1};
  } else if (name == "s3xs1_annulus") {
    e.diagram = block_diagram(name, 0, {{0, +1}, {0, +1}});
    e.betti = {1, 1, 0, 0, 1, 1};
  } else {
    throw InvalidInputError("unknown building block '" + name + "'");
  }
  return e;
}

CatalogEntry sphere_bundle_family(int g, int h) {
  if (g < 0 || h < 0 || 2 * g + h <= 1) {
    throw InvalidInputError("sphere_bundle_family requires g, h >= 0 and 2g + h >= 2");
  }
  CatalogEntry e;
  e.name = "sphere_bundle_family(" + std::to_string(g) + "," + std::to_string(h) + ")";
  std::vector<std::pair<int, int>> circles(h, {0, +1});
  e.diagram = block_diagram(e.name, g, circles);
  const long long k = 2 * g + h - 1;
  e.betti = {1, k + 1, 2 * k, k, k + 1, 1};
  return e;
}

CatalogEntry family_X(int n, int l) {
  if (n < 0 || l < 0) {
    throw InvalidInputError("family_X requires n, l >= 0");
  }
  const long long chi = 2 + 2LL * n - 2LL * l;
  const std::string name = "X(" + std::to_string(n) + "," + std::to_string(l) + ")";
  if (l > n + 1) {
    throw InadmissibleError(name + ": Euler characteristic " + std::to_string(chi) +
                                " is negative, no boundary Lefschetz fibration exists",
                            chi);
  }
  CatalogEntry e;
  e.name = name;
  e.betti = {1, l, 2LL * n, n, l, 1};
  if (n == 0) {
    e.diagram = l == 0 ? building_block("s4").diagram
                       : direct_family_diagram(name, 0, +1, l);
    return e;
  }
  std::vector<FibrationDiagram> blocks(n, building_block("s2xs2").diagram);
  const bool holdout = l >= 1 && n >= 2 && parity_pow(n - 1) == -1;
  e.diagram = build_by_plan(std::move(blocks), holdout, l, name);
  return e;
}

CatalogEntry family_Y(int n, int m, int l) {
  if (n < 0 || m < 0 || l < 0 || n + m < 1) {
    throw InvalidInputError("family_Y requires n, m, l >= 0 and n + m >= 1");
  }
  const long long chi = 2 + n + m - 2LL * l;
  const std::string name = "Y(" + std::to_string(n) + "," + std::to_string(m) + "," +
                           std::to_string(l) + ")";
  if (chi < 0) {
    throw InadmissibleError(name + ": Euler characteristic " + std::to_string(chi) +
                                " is negative, no boundary Lefschetz fibration exists",
                            chi);
  }
  CatalogEntry e;
  e.name = name;
  e.betti = {1, l, n + m, n, l, 1};
  if (n == 0 && l >= 1) {
    e.diagram = direct_family_diagram(name, n + m + 2 - 2 * l, parity_pow(n - 1 + l), l);
    return e;
  }
  std::vector<FibrationDiagram> blocks;
  for (int i = 0; i < m; ++i) {
    blocks.push_back(building_block("cp2bar").diagram);
  }
  for (int i = 0; i < n; ++i) {
    blocks.push_back(building_block("cp2").diagram);  // holdout candidate goes last
  }
  const bool holdout = l >= 1 && n >= 1 && blocks.size() >= 2 && parity_pow(n - 1) == -1;
  e.diagram = build_by_plan(std::move(blocks), holdout, l, name);
  return e;
}

InvariantReport verify_entry(const CatalogEntry& e) {
  auto violations = validate(e.diagram);
  if (!violations.empty()) {
    throw DiscrepancyError(e.name + ": diagram invalid: " + violations.front());
  }
  InvariantReport r = compute_invariants(e.diagram);
  if (r.chi != e.betti.chi()) {
    throw DiscrepancyError(e.name + ": diagram chi " + std::to_string(r.chi) +
                           " != Betti chi " + std::to_string(e.betti.chi()));
  }
  if (r.chi != r.corner_count + r.lefschetz_count) {
    throw DiscrepancyError(e.name + ": chi != corners + lefschetz");
  }
  const bool almost_complex_even = (1 - e.betti.b1 + e.betti.b2_plus) % 2 == 0;
  if (r.admits_gcs_total != almost_complex_even) {
    throw DiscrepancyError(e.name + ": stable GCS criterion (total parity " +
                           std::to_string(r.total_parity) + ") disagrees with 1 - b1 + b2+ = " +
                           std::to_string(1 - e.betti.b1 + e.betti.b2_plus));
  }
  return r;
}

std::vector<CatalogEntry> standard_manifest(int n_max, int m_max) {
  std::vector<CatalogEntry> entries;
  for (const char* name : {"cp2", "cp2bar", "s2xs2", "s4", "s3xs1_disk", "s3xs1_annulus"}) {
    entries.push_back(building_block(name));
  }
  for (const auto& [g, h] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 0}, {1, 2}}) {
    entries.push_back(sphere_bundle_family(g, h));
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n + 1; ++l) {
      entries.push_back(family_X(n, l));
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      if (n + m < 1) {
        continue;
      }
      for (int l = 0; 2 * l <= n + m + 2; ++l) {
        entries.push_back(family_Y(n, m, l));
      }
    }
  }
  return entries;
}

}  // namespace blf

#include "blf/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "blf/errors.hpp"

namespace blf {

using nlohmann::json;

FibrationDiagram::FibrationDiagram() : history(json::array()) {}

std::string kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::necklace:
      return "necklace";
    case ComponentKind::torus:
      return "torus";
    case ComponentKind::klein_bottle:
      return "klein_bottle";
  }
  return "?";
}

namespace {

DivisorComponent component_for(int corners, int parity) {
  if (corners > 0) {
    return {ComponentKind::necklace, corners, parity};
  }
  return {parity == +1 ? ComponentKind::torus : ComponentKind::klein_bottle, 0, parity};
}

BoundaryCircle make_circle(std::vector<std::string> corners, int parity) {
  BoundaryCircle c;
  c.component = component_for(static_cast<int>(corners.size()), parity);
  c.coorientable = c.component.kind != ComponentKind::klein_bottle;
  c.corners = std::move(corners);
  return c;
}

// Fresh ids: smallest "prefixN" not used anywhere in the diagram.
std::set<std::string> all_ids(const FibrationDiagram& d) {
  std::set<std::string> ids;
  for (const auto& c : d.circles) {
    ids.insert(c.corners.begin(), c.corners.end());
  }
  for (const auto& l : d.lefschetz) {
    ids.insert(l.id);
    if (l.basis_tag) {
      ids.insert(*l.basis_tag);
    }
  }
  return ids;
}

std::string fresh_id(const std::set<std::string>& used, const std::string& prefix) {
  for (int i = 0;; ++i) {
    std::string candidate = prefix + std::to_string(i);
    if (!used.count(candidate)) {
      return candidate;
    }
  }
}

// Renames ids of `incoming` that collide with ids of `base`.
void uniquify_against(FibrationDiagram& incoming, const FibrationDiagram& base) {
  std::set<std::string> used = all_ids(base);
  auto rename = [&used](std::string& id) {
    if (!used.count(id)) {
      used.insert(id);
      return;
    }
    int i = 2;
    std::string candidate;
    do {
      candidate = id + "#" + std::to_string(i++);
    } while (used.count(candidate));
    id = candidate;
    used.insert(id);
  };
  for (auto& c : incoming.circles) {
    for (auto& id : c.corners) {
      rename(id);
    }
  }
  std::map<std::string, std::string> tag_map;
  for (auto& l : incoming.lefschetz) {
    rename(l.id);
    if (l.basis_tag) {
      auto it = tag_map.find(*l.basis_tag);
      if (it == tag_map.end()) {
        std::string renamed = *l.basis_tag;
        rename(renamed);
        it = tag_map.emplace(*l.basis_tag, renamed).first;
      }
      l.basis_tag = it->second;
    }
  }
}

// Corners of `c` strictly after `from`, wrapping around, stopping before
// `upto`. Used for splicing circles in sums and splits.
std::vector<std::string> arc_between(const BoundaryCircle& c, int from, int upto) {
  const int k = static_cast<int>(c.corners.size());
  std::vector<std::string> out;
  for (int i = (from + 1) % k; i != upto; i = (i + 1) % k) {
    out.push_back(c.corners[i]);
  }
  return out;
}

json op_record(const std::string& op) {
  json rec = json::object();
  rec["op"] = op;
  return rec;
}

}  // namespace

CornerPos resolve_corner(const FibrationDiagram& d, const CornerRef& ref) {
  if (std::holds_alternative<std::string>(ref)) {
    const auto& id = std::get<std::string>(ref);
    for (int ci = 0; ci < static_cast<int>(d.circles.size()); ++ci) {
      const auto& corners = d.circles[ci].corners;
      for (int p = 0; p < static_cast<int>(corners.size()); ++p) {
        if (corners[p] == id) {
          return {ci, p};
        }
      }
    }
    throw RefError("corner '" + id + "' not found");
  }
  const auto pos = std::get<CornerPos>(ref);
  if (pos.circle < 0 || pos.circle >= static_cast<int>(d.circles.size())) {
    throw RefError("circle index " + std::to_string(pos.circle) + " out of range");
  }
  const auto& corners = d.circles[pos.circle].corners;
  if (corners.empty()) {
    throw RefError("circle " + std::to_string(pos.circle) + " has no corners");
  }
  if (pos.position < 0 || pos.position >= static_cast<int>(corners.size())) {
    throw RefError("corner position " + std::to_string(pos.position) +
                   " out of range on circle " + std::to_string(pos.circle));
  }
  return pos;
}

CornerRef corner_ref_from_token(const FibrationDiagram& d, const std::string& token) {
  if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
    int index = std::stoi(token);
    for (int ci = 0; ci < static_cast<int>(d.circles.size()); ++ci) {
      const int k = static_cast<int>(d.circles[ci].corners.size());
      if (index < k) {
        return CornerPos{ci, index};
      }
      index -= k;
    }
    throw RefError("corner index " + token + " out of range");
  }
  return token;
}

std::vector<std::string> validate(const FibrationDiagram& d) {
  std::vector<std::string> v;
  if (!d.oriented) {
    v.push_back("diagram must be oriented");
  }
  if (d.genus < 0) {
    v.push_back("genus must be non-negative");
  }
  std::set<std::string> seen;
  for (size_t ci = 0; ci < d.circles.size(); ++ci) {
    const auto& c = d.circles[ci];
    const std::string where = "circle " + std::to_string(ci);
    const int k = static_cast<int>(c.corners.size());
    if (c.component.parity != 1 && c.component.parity != -1) {
      v.push_back(where + ": parity must be +1 or -1");
    }
    switch (c.component.kind) {
      case ComponentKind::necklace:
        if (c.component.k < 1) {
          v.push_back(where + ": necklace needs k >= 1");
        }
        if (c.component.k != k) {
          v.push_back(where + ": necklace(" + std::to_string(c.component.k) +
                      ") on a circle with " + std::to_string(k) + " corners");
        }
        break;
      case ComponentKind::torus:
        if (k != 0) {
          v.push_back(where + ": torus component on a circle with corners");
        }
        if (c.component.parity != +1) {
          v.push_back(where + ": torus component must have parity +1");
        }
        if (!c.coorientable) {
          v.push_back(where + ": torus component must be co-orientable");
        }
        break;
      case ComponentKind::klein_bottle:
        if (k != 0) {
          v.push_back(where + ": klein bottle component on a circle with corners");
        }
        if (c.component.parity != -1) {
          v.push_back(where + ": klein bottle component must have parity -1");
        }
        if (c.coorientable) {
          v.push_back(where + ": klein bottle component cannot be co-orientable");
        }
        break;
    }
    for (const auto& id : c.corners) {
      if (!seen.insert(id).second) {
        v.push_back("duplicate corner id '" + id + "'");
      }
    }
  }
  std::set<std::string> lef_seen;
  for (const auto& l : d.lefschetz) {
    if (!lef_seen.insert(l.id).second) {
      v.push_back("duplicate Lefschetz id '" + l.id + "'");
    }
    if (l.cycle) {
      if (l.cycle->a == 0 && l.cycle->b == 0) {
        v.push_back("Lefschetz point '" + l.id + "' has zero vanishing cycle");
      } else if (!is_primitive(*l.cycle)) {
        v.push_back("Lefschetz point '" + l.id + "' has non-primitive vanishing cycle");
      }
    }
  }
  return v;
}

void require_valid(const FibrationDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) {
    const std::string msg = "invalid diagram: " + v.front();
    throw ValidationError(msg, std::move(v));
  }
}

int corner_count(const FibrationDiagram& d) {
  int k = 0;
  for (const auto& c : d.circles) {
    k += static_cast<int>(c.corners.size());
  }
  return k;
}

int lefschetz_count(const FibrationDiagram& d) { return static_cast<int>(d.lefschetz.size()); }

long long euler_characteristic(const FibrationDiagram& d) {
  require_valid(d);
  return corner_count(d) + lefschetz_count(d);
}

int total_parity(const FibrationDiagram& d) {
  int p = 1;
  for (const auto& c : d.circles) {
    p *= c.component.parity;
  }
  return p;
}

int base_euler_characteristic(const FibrationDiagram& d) {
  return 2 - 2 * d.genus - static_cast<int>(d.circles.size());
}

bool admits_elliptic_symplectic(const FibrationDiagram& d) {
  require_valid(d);
  return d.homologically_essential && d.fibres_connected;
}

bool admits_stable_gcs(const FibrationDiagram& d, GcsMode mode) {
  if (!admits_elliptic_symplectic(d)) {
    return false;
  }
  if (mode == GcsMode::total) {
    return total_parity(d) == +1;
  }
  for (const auto& c : d.circles) {
    if (c.component.parity != +1) {
      return false;
    }
  }
  return true;
}

FibrationDiagram corner_connected_sum(const FibrationDiagram& d1, const CornerRef& ref1,
                                      const FibrationDiagram& d2, const CornerRef& ref2) {
  require_valid(d1);
  require_valid(d2);
  if (!d1.fibres_connected || !d2.fibres_connected) {
    throw ValidationError("corner_connected_sum: fibres must be connected", {});
  }
  const CornerPos p1 = resolve_corner(d1, ref1);
  // Resolve against the original ids; renaming below keeps positions.
  const CornerPos p2 = resolve_corner(d2, ref2);

  FibrationDiagram other = d2;
  uniquify_against(other, d1);

  const auto& c1 = d1.circles[p1.circle];
  const auto& c2 = other.circles[p2.circle];

  // Splice the two circles: both glued corners disappear.
  std::vector<std::string> merged = arc_between(c1, p1.position, p1.position);
  auto tail = arc_between(c2, p2.position, p2.position);
  merged.insert(merged.end(), tail.begin(), tail.end());
  const int parity = -c1.component.parity * c2.component.parity;

  FibrationDiagram out;
  out.genus = d1.genus + d2.genus;
  out.circles.push_back(make_circle(std::move(merged), parity));
  for (int i = 0; i < static_cast<int>(d1.circles.size()); ++i) {
    if (i != p1.circle) {
      out.circles.push_back(d1.circles[i]);
    }
  }
  for (int i = 0; i < static_cast<int>(other.circles.size()); ++i) {
    if (i != p2.circle) {
      out.circles.push_back(other.circles[i]);
    }
  }
  out.lefschetz = d1.lefschetz;
  out.lefschetz.insert(out.lefschetz.end(), other.lefschetz.begin(), other.lefschetz.end());
  out.homologically_essential = d1.homologically_essential && d2.homologically_essential;
  out.fibres_connected = true;

  out.history = d1.history;
  json rec = op_record("corner_connected_sum");
  rec["at"] = json::array({c1.corners[p1.position], c2.corners[p2.position]});
  rec["merged_parity"] = parity;
  rec["other_history"] = other.history;
  out.history.push_back(std::move(rec));
  require_valid(out);
  return out;
}

FibrationDiagram self_connected_sum(const FibrationDiagram& d, const CornerRef& ref1,
                                    const CornerRef& ref2) {
  require_valid(d);
  if (!d.fibres_connected) {
    throw ValidationError("self_connected_sum: fibres must be connected", {});
  }
  const CornerPos p1 = resolve_corner(d, ref1);
  const CornerPos p2 = resolve_corner(d, ref2);
  if (p1.circle == p2.circle && p1.position == p2.position) {
    throw RefError("self_connected_sum: corner refs must be distinct");
  }

  FibrationDiagram out;
  out.lefschetz = d.lefschetz;
  out.homologically_essential = d.homologically_essential;
  out.fibres_connected = true;
  out.history = d.history;
  json rec = op_record("self_connected_sum");
  rec["at"] = json::array({d.circles[p1.circle].corners[p1.position],
                           d.circles[p2.circle].corners[p2.position]});
  rec["total_space"] = "connected sum with S1 x S3";

  if (p1.circle != p2.circle) {
    // Circles merge; the base gains a handle.
    const auto& c1 = d.circles[p1.circle];
    const auto& c2 = d.circles[p2.circle];
    std::vector<std::string> merged = arc_between(c1, p1.position, p1.position);
    auto tail = arc_between(c2, p2.position, p2.position);
    merged.insert(merged.end(), tail.begin(), tail.end());
    const int parity = -c1.component.parity * c2.component.parity;
    out.genus = d.genus + 1;
    out.circles.push_back(make_circle(std::move(merged), parity));
    for (int i = 0; i < static_cast<int>(d.circles.size()); ++i) {
      if (i != p1.circle && i != p2.circle) {
        out.circles.push_back(d.circles[i]);
      }
    }
    rec["case"] = "different_circles";
    rec["merged_parity"] = parity;
  } else {
    // One circle splits in two along the corner positions. The parity
    // product is forced to -1; the piece with fewer corners gets +1, and
    // the first piece wins ties.
    const auto& c = d.circles[p1.circle];
    std::vector<std::string> piece1 = arc_between(c, p1.position, p2.position);
    std::vector<std::string> piece2 = arc_between(c, p2.position, p1.position);
    const bool first_plus = piece1.size() <= piece2.size();
    out.genus = d.genus;
    out.circles.push_back(make_circle(std::move(piece1), first_plus ? +1 : -1));
    out.circles.push_back(make_circle(std::move(piece2), first_plus ? -1 : +1));
    for (int i = 0; i < static_cast<int>(d.circles.size()); ++i) {
      if (i != p1.circle) {
        out.circles.push_back(d.circles[i]);
      }
    }
    rec["case"] = "same_circle";
    rec["parity_assignment"] = first_plus ? "piece1:+1" : "piece2:+1";
  }
  out.history.push_back(std::move(rec));
  require_valid(out);
  return out;
}

FibrationDiagram trade_corner_to_lefschetz(const FibrationDiagram& d, const CornerRef& ref,
                                           bool record_cycle) {
  require_valid(d);
  if (!d.fibres_connected) {
    throw ValidationError("trade_corner_to_lefschetz: fibres must be connected", {});
  }
  const CornerPos p = resolve_corner(d, ref);

  FibrationDiagram out = d;
  auto& circle = out.circles[p.circle];
  const std::string corner_id = circle.corners[p.position];
  circle.corners.erase(circle.corners.begin() + p.position);
  circle.component =
      component_for(static_cast<int>(circle.corners.size()), circle.component.parity);
  circle.coorientable = circle.component.kind != ComponentKind::klein_bottle;

  std::set<std::string> used = all_ids(out);
  LefschetzPoint point;
  point.id = fresh_id(used, "L");
  json rec = op_record("trade_corner_to_lefschetz");
  rec["at"] = corner_id;
  rec["lefschetz"] = point.id;
  if (record_cycle) {
    used.insert(point.id);
    point.cycle = Cycle{1, 1};
    point.basis_tag = fresh_id(used, "b");
    // In this chart basis the adjacent elliptic vanishing cycle reads (1,0).
    rec["cycle"] = json::array({1, 1});
    rec["basis_tag"] = *point.basis_tag;
  }
  out.lefschetz.push_back(std::move(point));
  out.history.push_back(std::move(rec));
  require_valid(out);
  return out;
}

FibrationDiagram trade_lefschetz_to_corner(const FibrationDiagram& d,
                                           const std::string& lefschetz_ref, int circle_ref,
                                           const DualPairEvidence& evidence) {
  require_valid(d);
  if (!d.fibres_connected) {
    throw ValidationError("trade_lefschetz_to_corner: fibres must be connected", {});
  }
  if (circle_ref < 0 || circle_ref >= static_cast<int>(d.circles.size())) {
    throw RefError("circle index " + std::to_string(circle_ref) + " out of range");
  }
  auto it = std::find_if(d.lefschetz.begin(), d.lefschetz.end(),
                         [&](const LefschetzPoint& l) { return l.id == lefschetz_ref; });
  if (it == d.lefschetz.end()) {
    throw RefError("Lefschetz point '" + lefschetz_ref + "' not found");
  }

  if (!evidence.asserted) {
    if (!evidence.lefschetz_cycle || !evidence.elliptic_cycle || !evidence.basis_tag) {
      throw EvidenceError("trade_lefschetz_to_corner: dual-pair evidence missing");
    }
    if (!is_dual_pair(*evidence.lefschetz_cycle, *evidence.elliptic_cycle)) {
      throw EvidenceError("trade_lefschetz_to_corner: cycles are not a dual pair");
    }
    if (it->cycle) {
      if (!it->basis_tag) {
        throw EvidenceError(
            "trade_lefschetz_to_corner: point has no basis tag, cycles are not comparable");
      }
      if (*it->basis_tag != *evidence.basis_tag) {
        throw EvidenceError("trade_lefschetz_to_corner: basis tag mismatch ('" +
                            *it->basis_tag + "' vs '" + *evidence.basis_tag + "')");
      }
      if (!same_cycle_up_to_sign(*it->cycle, *evidence.lefschetz_cycle)) {
        throw EvidenceError(
            "trade_lefschetz_to_corner: evidence disagrees with the recorded vanishing cycle");
      }
    }
  }

  FibrationDiagram out = d;
  out.lefschetz.erase(out.lefschetz.begin() + (it - d.lefschetz.begin()));
  auto& circle = out.circles[circle_ref];
  const std::string corner_id = fresh_id(all_ids(out), "k");
  circle.corners.push_back(corner_id);
  circle.component =
      component_for(static_cast<int>(circle.corners.size()), circle.component.parity);
  circle.coorientable = true;

  json rec = op_record("trade_lefschetz_to_corner");
  rec["lefschetz"] = lefschetz_ref;
  rec["corner"] = corner_id;
  rec["evidence"] = evidence.asserted ? "asserted" : "dual_pair_checked";
  out.history.push_back(std::move(rec));
  require_valid(out);
  return out;
}

namespace {

int kind_ordinal(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::necklace:
      return 0;
    case ComponentKind::torus:
      return 1;
    case ComponentKind::klein_bottle:
      return 2;
  }
  return 3;
}

// Sort key for circles: corner count, then parity (+1 first), then kind.
std::tuple<int, int, int> circle_key(const BoundaryCircle& c) {
  return {static_cast<int>(c.corners.size()), c.component.parity == +1 ? 0 : 1,
          kind_ordinal(c.component.kind)};
}

}  // namespace

FibrationDiagram canonical_form(const FibrationDiagram& d) {
  require_valid(d);
  FibrationDiagram out = d;

  std::stable_sort(out.circles.begin(), out.circles.end(),
                   [](const BoundaryCircle& x, const BoundaryCircle& y) {
                     return circle_key(x) < circle_key(y);
                   });
  for (size_t ci = 0; ci < out.circles.size(); ++ci) {
    auto& c = out.circles[ci];
    for (size_t p = 0; p < c.corners.size(); ++p) {
      c.corners[p] = "c" + std::to_string(ci) + "." + std::to_string(p);
    }
    c.coorientable = c.component.kind != ComponentKind::klein_bottle;
  }

  for (auto& l : out.lefschetz) {
    if (l.cycle) {
      l.cycle = normalized(*l.cycle);
    }
  }
  // Basis tags are opaque; order them by the multiset of cycles recorded
  // against them so that relabelling is isomorphism-invariant.
  std::map<std::string, std::vector<std::pair<long long, long long>>> tag_cycles;
  for (const auto& l : out.lefschetz) {
    if (l.basis_tag) {
      auto& bucket = tag_cycles[*l.basis_tag];
      if (l.cycle) {
        bucket.emplace_back(l.cycle->a, l.cycle->b);
      } else {
        bucket.emplace_back(0, 0);
      }
    }
  }
  for (auto& [tag, bucket] : tag_cycles) {
    std::sort(bucket.begin(), bucket.end());
  }
  std::vector<std::string> tags;
  tags.reserve(tag_cycles.size());
  for (const auto& [tag, bucket] : tag_cycles) {
    tags.push_back(tag);
  }
  std::stable_sort(tags.begin(), tags.end(), [&](const std::string& x, const std::string& y) {
    return tag_cycles[x] < tag_cycles[y];
  });
  std::map<std::string, std::string> tag_names;
  for (size_t i = 0; i < tags.size(); ++i) {
    tag_names[tags[i]] = "b" + std::to_string(i);
  }
  auto tag_rank = [&](const LefschetzPoint& l) {
    if (!l.basis_tag) {
      return -1;
    }
    return static_cast<int>(std::find(tags.begin(), tags.end(), *l.basis_tag) - tags.begin());
  };
  std::stable_sort(out.lefschetz.begin(), out.lefschetz.end(),
                   [&](const LefschetzPoint& x, const LefschetzPoint& y) {
                     auto key = [&](const LefschetzPoint& l) {
                       return std::tuple<int, long long, long long, int>(
                           l.cycle ? 1 : 0, l.cycle ? l.cycle->a : 0, l.cycle ? l.cycle->b : 0,
                           tag_rank(l));
                     };
                     return key(x) < key(y);
                   });
  for (size_t i = 0; i < out.lefschetz.size(); ++i) {
    out.lefschetz[i].id = "L" + std::to_string(i);
    if (out.lefschetz[i].basis_tag) {
      out.lefschetz[i].basis_tag = tag_names[*out.lefschetz[i].basis_tag];
    }
  }
  return out;
}

namespace {

std::tuple<int, std::vector<std::tuple<int, int, int>>,
           std::vector<std::tuple<bool, long long, long long, std::string>>, bool, bool>
iso_key(const FibrationDiagram& d) {
  FibrationDiagram c = canonical_form(d);
  std::vector<std::tuple<int, int, int>> circles;
  for (const auto& circle : c.circles) {
    circles.emplace_back(static_cast<int>(circle.corners.size()), circle.component.parity,
                         kind_ordinal(circle.component.kind));
  }
  std::vector<std::tuple<bool, long long, long long, std::string>> lefschetz;
  for (const auto& l : c.lefschetz) {
    lefschetz.emplace_back(l.cycle.has_value(), l.cycle ? l.cycle->a : 0,
                           l.cycle ? l.cycle->b : 0, l.basis_tag.value_or(""));
  }
  return {c.genus, std::move(circles), std::move(lefschetz), c.homologically_essential,
          c.fibres_connected};
}

}  // namespace

bool is_isomorphic(const FibrationDiagram& d1, const FibrationDiagram& d2) {
  return iso_key(d1) == iso_key(d2);
}

}  // namespace blf

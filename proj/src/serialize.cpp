#include "blf/serialize.hpp"

#include "blf/errors.hpp"

namespace blf {

using nlohmann::json;

namespace {

json component_to_json(const DivisorComponent& comp) {
  json j = json::object();
  j["kind"] = kind_name(comp.kind);
  if (comp.kind == ComponentKind::necklace) {
    j["k"] = comp.k;
  }
  j["parity"] = comp.parity;
  return j;
}

const json& expect(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing key '" + std::string(key) + "' in " + where);
  }
  return *it;
}

int expect_int(const json& obj, const char* key, const std::string& where) {
  const json& v = expect(obj, key, where);
  if (!v.is_number_integer()) {
    throw ParseError("key '" + std::string(key) + "' in " + where + " must be an integer");
  }
  return v.get<int>();
}

bool expect_bool(const json& obj, const char* key, const std::string& where) {
  const json& v = expect(obj, key, where);
  if (!v.is_boolean()) {
    throw ParseError("key '" + std::string(key) + "' in " + where + " must be a boolean");
  }
  return v.get<bool>();
}

}  // namespace

json diagram_to_json(const FibrationDiagram& d, bool include_history) {
  FibrationDiagram c = canonical_form(d);
  json doc = json::object();
  doc["version"] = kDiagramFormatVersion;
  doc["genus"] = c.genus;
  json circles = json::array();
  for (const auto& circle : c.circles) {
    json jc = json::object();
    jc["corners"] = circle.corners;
    jc["coorientable"] = circle.coorientable;
    jc["component"] = component_to_json(circle.component);
    circles.push_back(std::move(jc));
  }
  doc["circles"] = std::move(circles);
  json lefschetz = json::array();
  for (const auto& l : c.lefschetz) {
    json jl = json::object();
    jl["id"] = l.id;
    if (l.cycle) {
      jl["cycle"] = json::array({l.cycle->a, l.cycle->b});
    }
    if (l.basis_tag) {
      jl["basis_tag"] = *l.basis_tag;
    }
    lefschetz.push_back(std::move(jl));
  }
  doc["lefschetz"] = std::move(lefschetz);
  doc["flags"] = {{"homologically_essential", c.homologically_essential},
                  {"fibres_connected", c.fibres_connected}};
  if (include_history) {
    doc["history"] = c.history;
  }
  return doc;
}

FibrationDiagram diagram_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("diagram document must be a JSON object");
  }
  const json& version = expect(doc, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kDiagramFormatVersion) {
    throw VersionError("unsupported diagram format version " + version.dump());
  }
  FibrationDiagram d;
  d.genus = expect_int(doc, "genus", "document");
  const json& circles = expect(doc, "circles", "document");
  if (!circles.is_array()) {
    throw ParseError("'circles' must be an array");
  }
  for (size_t i = 0; i < circles.size(); ++i) {
    const std::string where = "circles[" + std::to_string(i) + "]";
    const json& jc = circles[i];
    if (!jc.is_object()) {
      throw ParseError(where + " must be an object");
    }
    BoundaryCircle circle;
    const json& corners = expect(jc, "corners", where);
    if (!corners.is_array()) {
      throw ParseError(where + ".corners must be an array");
    }
    for (const auto& id : corners) {
      if (!id.is_string()) {
        throw ParseError(where + ".corners entries must be strings");
      }
      circle.corners.push_back(id.get<std::string>());
    }
    circle.coorientable = expect_bool(jc, "coorientable", where);
    const json& comp = expect(jc, "component", where);
    const json& kind = expect(comp, "kind", where + ".component");
    if (!kind.is_string()) {
      throw ParseError(where + ".component.kind must be a string");
    }
    const std::string kind_str = kind.get<std::string>();
    if (kind_str == "necklace") {
      circle.component.kind = ComponentKind::necklace;
      circle.component.k = expect_int(comp, "k", where + ".component");
    } else if (kind_str == "torus") {
      circle.component.kind = ComponentKind::torus;
    } else if (kind_str == "klein_bottle") {
      circle.component.kind = ComponentKind::klein_bottle;
    } else {
      throw ParseError(where + ".component.kind: unknown kind '" + kind_str + "'");
    }
    circle.component.parity = expect_int(comp, "parity", where + ".component");
    d.circles.push_back(std::move(circle));
  }
  const json& lefschetz = expect(doc, "lefschetz", "document");
  if (!lefschetz.is_array()) {
    throw ParseError("'lefschetz' must be an array");
  }
  for (size_t i = 0; i < lefschetz.size(); ++i) {
    const std::string where = "lefschetz[" + std::to_string(i) + "]";
    const json& jl = lefschetz[i];
    LefschetzPoint point;
    const json& id = expect(jl, "id", where);
    if (!id.is_string()) {
      throw ParseError(where + ".id must be a string");
    }
    point.id = id.get<std::string>();
    if (jl.contains("cycle")) {
      const json& cyc = jl["cycle"];
      if (!cyc.is_array() || cyc.size() != 2 || !cyc[0].is_number_integer() ||
          !cyc[1].is_number_integer()) {
        throw ParseError(where + ".cycle must be a two-element integer array");
      }
      point.cycle = Cycle{cyc[0].get<long long>(), cyc[1].get<long long>()};
    }
    if (jl.contains("basis_tag")) {
      if (!jl["basis_tag"].is_string()) {
        throw ParseError(where + ".basis_tag must be a string");
      }
      point.basis_tag = jl["basis_tag"].get<std::string>();
    }
    d.lefschetz.push_back(std::move(point));
  }
  const json& flags = expect(doc, "flags", "document");
  d.homologically_essential = expect_bool(flags, "homologically_essential", "flags");
  d.fibres_connected = expect_bool(flags, "fibres_connected", "flags");
  d.oriented = true;
  if (doc.contains("history")) {
    if (!doc["history"].is_array()) {
      throw ParseError("'history' must be an array");
    }
    d.history = doc["history"];
  }
  auto violations = validate(d);
  if (!violations.empty()) {
    throw ParseError("document violates diagram invariants: " + violations.front());
  }
  return d;
}

std::string serialize_diagram(const FibrationDiagram& d) {
  return diagram_to_json(d, true).dump(2) + "\n";
}

FibrationDiagram parse_diagram(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed diagram document: " + std::string(e.what()));
  }
  return diagram_from_json(doc);
}

std::string canonical_bytes(const FibrationDiagram& d) {
  return diagram_to_json(d, false).dump(2) + "\n";
}

json form_to_json(const EllipticChartForm& w) {
  json doc = json::object();
  doc["frame"] = kChartFrameTag;
  doc["coefficients"] =
      json::array({w.logr1_logr2.str(), w.logr1_theta1.str(), w.logr1_theta2.str(),
                   w.theta1_logr2.str(), w.theta1_theta2.str(), w.logr2_theta2.str()});
  return doc;
}

EllipticChartForm form_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("frame") || !doc.contains("coefficients")) {
    throw ParseError("chart form document needs 'frame' and 'coefficients'");
  }
  if (doc["frame"] != kChartFrameTag) {
    throw VersionError("unsupported chart frame " + doc["frame"].dump());
  }
  const json& coeffs = doc["coefficients"];
  if (!coeffs.is_array() || coeffs.size() != 6) {
    throw ParseError("chart form needs exactly six coefficients");
  }
  auto at = [&](int i) {
    const json& v = coeffs[i];
    if (v.is_number_integer()) {
      return Rational{v.get<long long>()};
    }
    if (v.is_string()) {
      return parse_rational(v.get<std::string>());
    }
    throw ParseError("chart coefficients must be integers or 'p/q' strings");
  };
  EllipticChartForm w;
  w.logr1_logr2 = at(0);
  w.logr1_theta1 = at(1);
  w.logr1_theta2 = at(2);
  w.theta1_logr2 = at(3);
  w.theta1_theta2 = at(4);
  w.logr2_theta2 = at(5);
  return w;
}

}  // namespace blf

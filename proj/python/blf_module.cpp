// Python bindings. Diagrams travel as JSON strings (the same documents the
// CLI reads and writes); cycles as (a, b) tuples; mapping classes as nested
// lists; exact rationals as 'p/q' strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "blf/catalog.hpp"
#include "blf/chartforms.hpp"
#include "blf/diagram.hpp"
#include "blf/errors.hpp"
#include "blf/render.hpp"
#include "blf/serialize.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

blf::Cycle cycle_of(std::pair<long long, long long> c) { return {c.first, c.second}; }

py::list matrix_out(const blf::MappingClass& m) {
  py::list rows;
  py::list r0, r1;
  r0.append(m.m[0]);
  r0.append(m.m[1]);
  r1.append(m.m[2]);
  r1.append(m.m[3]);
  rows.append(r0);
  rows.append(r1);
  return rows;
}

blf::MappingClass matrix_in(const std::vector<std::vector<long long>>& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
    throw blf::InvalidInputError("mapping class must be a 2x2 integer matrix");
  }
  return blf::MappingClass{{rows[0][0], rows[0][1], rows[1][0], rows[1][1]}};
}

blf::FibrationDiagram diagram_in(const std::string& text) { return blf::parse_diagram(text); }

std::string diagram_out(const blf::FibrationDiagram& d) { return blf::serialize_diagram(d); }

blf::EllipticChartForm form_in(const std::string& text) {
  return blf::form_from_json(json::parse(text));
}

std::string form_out(const blf::EllipticChartForm& w) { return blf::form_to_json(w).dump(); }

py::dict invariants_out(const blf::InvariantReport& r) {
  py::dict d;
  d["chi"] = r.chi;
  d["corner_count"] = r.corner_count;
  d["lefschetz_count"] = r.lefschetz_count;
  d["total_parity"] = r.total_parity;
  d["admits_gcs_total"] = r.admits_gcs_total;
  d["admits_gcs_per_component"] = r.admits_gcs_per_component;
  return d;
}

py::dict model_report_out(const blf::ModelCheckReport& r) {
  py::dict d;
  d["op"] = r.op;
  d["samples"] = r.samples;
  d["max_error"] = r.max_error;
  d["pass"] = r.pass;
  if (r.has_variant) {
    py::dict v;
    v["max_error"] = r.variant_max_error;
    v["pass"] = r.variant_pass;
    d["variant_substitution"] = v;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(pyblf, m) {
  m.doc() = "base diagrams of boundary Lefschetz fibrations: surgeries, invariants, "
            "residue criteria";

  // Translators run newest-first, so the base class goes in first.
  py::register_exception<blf::Error>(m, "ToolkitError", PyExc_RuntimeError);
  py::register_exception<blf::ParseError>(m, "DiagramParseError", PyExc_ValueError);
  py::register_exception<blf::InadmissibleError>(m, "InadmissibleError", PyExc_ValueError);

  // torus homology
  m.def("is_primitive",
        [](std::pair<long long, long long> c) { return blf::is_primitive(cycle_of(c)); });
  m.def("dehn_twist", [](std::pair<long long, long long> c) {
    return matrix_out(blf::dehn_twist(cycle_of(c)));
  });
  m.def("compose", [](const std::vector<std::vector<long long>>& a,
                      const std::vector<std::vector<long long>>& b) {
    return matrix_out(blf::compose(matrix_in(a), matrix_in(b)));
  });
  m.def("apply_class", [](const std::vector<std::vector<long long>>& mat,
                          std::pair<long long, long long> c) {
    const auto out = blf::apply(matrix_in(mat), cycle_of(c));
    return std::make_pair(out.a, out.b);
  });
  m.def("is_dual_pair", [](std::pair<long long, long long> c1,
                           std::pair<long long, long long> c2) {
    return blf::is_dual_pair(cycle_of(c1), cycle_of(c2));
  });

  // catalog
  m.def("building_block",
        [](const std::string& name) { return diagram_out(blf::building_block(name).diagram); });
  m.def("sphere_bundle_family",
        [](int g, int h) { return diagram_out(blf::sphere_bundle_family(g, h).diagram); });
  m.def("family_x", [](int n, int l) { return diagram_out(blf::family_X(n, l).diagram); });
  m.def("family_y",
        [](int n, int mm, int l) { return diagram_out(blf::family_Y(n, mm, l).diagram); });
  m.def("verify_catalog", [](int n_max, int m_max) {
    py::list out;
    for (const auto& entry : blf::standard_manifest(n_max, m_max)) {
      py::dict d;
      d["name"] = entry.name;
      try {
        d["report"] = invariants_out(blf::verify_entry(entry));
        d["ok"] = true;
      } catch (const blf::DiscrepancyError& e) {
        d["ok"] = false;
        d["error"] = e.what();
      }
      out.append(d);
    }
    return out;
  }, py::arg("n_max") = 6, py::arg("m_max") = 6);

  // diagram operations (JSON string in, JSON string out)
  m.def("corner_sum", [](const std::string& a, const std::string& ref_a, const std::string& b,
                         const std::string& ref_b) {
    const auto da = diagram_in(a);
    const auto db = diagram_in(b);
    return diagram_out(blf::corner_connected_sum(da, blf::corner_ref_from_token(da, ref_a), db,
                                                 blf::corner_ref_from_token(db, ref_b)));
  });
  m.def("self_sum", [](const std::string& a, const std::string& r1, const std::string& r2) {
    const auto d = diagram_in(a);
    return diagram_out(blf::self_connected_sum(d, blf::corner_ref_from_token(d, r1),
                                               blf::corner_ref_from_token(d, r2)));
  });
  m.def("trade_smooth",
        [](const std::string& a, const std::string& corner, bool record_cycle) {
          const auto d = diagram_in(a);
          return diagram_out(blf::trade_corner_to_lefschetz(
              d, blf::corner_ref_from_token(d, corner), record_cycle));
        },
        py::arg("diagram"), py::arg("corner"), py::arg("record_cycle") = true);
  m.def("trade_singularize",
        [](const std::string& a, const std::string& lefschetz, int circle, bool assert_dual,
           std::optional<std::pair<long long, long long>> cycle_lefschetz,
           std::optional<std::pair<long long, long long>> cycle_elliptic,
           std::optional<std::string> basis) {
          blf::DualPairEvidence evidence;
          if (assert_dual) {
            evidence = blf::DualPairEvidence::assertion();
          } else if (cycle_lefschetz && cycle_elliptic && basis) {
            evidence = blf::DualPairEvidence::cycles(cycle_of(*cycle_lefschetz),
                                                     cycle_of(*cycle_elliptic), *basis);
          }
          return diagram_out(
              blf::trade_lefschetz_to_corner(diagram_in(a), lefschetz, circle, evidence));
        },
        py::arg("diagram"), py::arg("lefschetz"), py::arg("circle"),
        py::arg("assert_dual_pair") = false, py::arg("cycle_lefschetz") = std::nullopt,
        py::arg("cycle_elliptic") = std::nullopt, py::arg("basis") = std::nullopt);
  m.def("invariants",
        [](const std::string& a) { return invariants_out(blf::compute_invariants(diagram_in(a))); });
  m.def("admits_stable_gcs", [](const std::string& a, const std::string& mode) {
    return blf::admits_stable_gcs(diagram_in(a), mode == "total" ? blf::GcsMode::total
                                                                 : blf::GcsMode::per_component);
  });
  m.def("canonical", [](const std::string& a) { return diagram_out(diagram_in(a)); });
  m.def("is_isomorphic", [](const std::string& a, const std::string& b) {
    return blf::is_isomorphic(diagram_in(a), diagram_in(b));
  });
  m.def("render_svg", [](const std::string& a) { return blf::render_svg(diagram_in(a)); });

  // chart forms; rationals as 'p/q' strings, forms as JSON strings
  m.def("from_complex_parameter", [](const std::string& re, const std::string& im) {
    return form_out(blf::from_complex_parameter(blf::parse_rational(re), blf::parse_rational(im)));
  });
  m.def("gt_interpolation",
        [](const std::string& t) { return form_out(blf::gt_interpolation(blf::parse_rational(t))); });
  m.def("pullback_log_form", [](const std::string& lambda) {
    return form_out(blf::pullback_log_form({blf::parse_rational(lambda)}));
  });
  m.def("residues", [](const std::string& w) {
    const auto r = blf::residues(form_in(w));
    py::dict d;
    d["res_q1"] = r.res_q1.str();
    d["res_q2"] = r.res_q2.str();
    d["res_r1r2"] = r.res_r1r2.str();
    d["res_theta1theta2"] = r.res_theta1theta2.str();
    d["res_r1theta2"] = r.res_r1theta2.str();
    d["res_theta1r2"] = r.res_theta1r2.str();
    return d;
  });
  m.def("pfaffian", [](const std::string& w) { return blf::pfaffian(form_in(w)).str(); });
  m.def("is_nondegenerate", [](const std::string& w) { return blf::is_nondegenerate(form_in(w)); });
  m.def("has_zero_elliptic_residue",
        [](const std::string& w) { return blf::has_zero_elliptic_residue(form_in(w)); });
  m.def("has_imaginary_parameter",
        [](const std::string& w) { return blf::has_imaginary_parameter(form_in(w)); });
  m.def("satisfies_gcs_residue_conditions",
        [](const std::string& w) { return blf::satisfies_gcs_residue_conditions(form_in(w)); });
  m.def("verify_corner_sum_model",
        [](int samples, std::uint64_t seed) {
          return model_report_out(blf::verify_corner_sum_model(samples, seed));
        },
        py::arg("samples") = 1000, py::arg("seed") = 7);
  m.def("verify_focus_focus_model",
        [](int samples, std::uint64_t seed) {
          return model_report_out(blf::verify_focus_focus_model(samples, seed));
        },
        py::arg("samples") = 1000, py::arg("seed") = 7);
}

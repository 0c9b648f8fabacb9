// Command-line front end: catalog construction, surgery operations,
// invariant reports, GCS checks, SVG rendering and the chart-model
// verifiers. Results go to stdout (or -o), diagnostics to stderr.
// Exit codes: 0 success, 1 I/O or parse errors, 2 domain errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "blf/catalog.hpp"
#include "blf/chartforms.hpp"
#include "blf/diagram.hpp"
#include "blf/errors.hpp"
#include "blf/render.hpp"
#include "blf/serialize.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw blf::ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw blf::ParseError("cannot write '" + out_path + "'");
  }
  out << bytes;
}

blf::FibrationDiagram load_diagram(const std::string& path) {
  return blf::parse_diagram(read_file(path));
}

blf::CornerRef corner_ref(const blf::FibrationDiagram& d, const std::string& token) {
  return blf::corner_ref_from_token(d, token);
}

blf::Cycle parse_cycle(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) {
    throw blf::ParseError("cycle must look like 'a,b', got '" + token + "'");
  }
  try {
    return {std::stoll(token.substr(0, comma)), std::stoll(token.substr(comma + 1))};
  } catch (const std::exception&) {
    throw blf::ParseError("cycle must look like 'a,b', got '" + token + "'");
  }
}

json report_to_json(const blf::InvariantReport& r) {
  json j = json::object();
  j["chi"] = r.chi;
  j["corner_count"] = r.corner_count;
  j["lefschetz_count"] = r.lefschetz_count;
  j["total_parity"] = r.total_parity;
  j["admits_gcs_total"] = r.admits_gcs_total;
  j["admits_gcs_per_component"] = r.admits_gcs_per_component;
  return j;
}

json betti_to_json(const blf::BettiNumbers& b) {
  json j = json::object();
  j["b0"] = b.b0;
  j["b1"] = b.b1;
  j["b2"] = b.b2;
  j["b2_plus"] = b.b2_plus;
  j["b3"] = b.b3;
  j["b4"] = b.b4;
  return j;
}

json model_report_to_json(const blf::ModelCheckReport& r) {
  json j = json::object();
  j["op"] = r.op;
  j["samples"] = r.samples;
  j["max_error"] = r.max_error;
  j["pass"] = r.pass;
  if (r.has_variant) {
    j["variant_substitution"] = {{"max_error", r.variant_max_error}, {"pass", r.variant_pass}};
  }
  return j;
}

struct CatalogBuildArgs {
  std::string name;
  int n = 0, m = 0, l = 0, g = 0, h = 0;
  bool has_n = false, has_m = false, has_l = false, has_g = false, has_h = false;
};

blf::CatalogEntry build_entry(const CatalogBuildArgs& a) {
  if (a.name == "X") {
    return blf::family_X(a.n, a.l);
  }
  if (a.name == "Y") {
    return blf::family_Y(a.n, a.m, a.l);
  }
  if (a.name == "sphere_bundle_family") {
    return blf::sphere_bundle_family(a.g, a.h);
  }
  return blf::building_block(a.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base-diagram toolkit for boundary Lefschetz fibrations"};
  app.require_subcommand(1);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "build and verify catalog entries");
  catalog->require_subcommand(1);
  CatalogBuildArgs build_args;
  std::string out_path;
  auto* cat_build = catalog->add_subcommand("build", "construct a catalog diagram");
  cat_build->add_option("name", build_args.name,
                        "cp2|cp2bar|s2xs2|s4|s3xs1_disk|s3xs1_annulus|sphere_bundle_family|X|Y")
      ->required();
  cat_build->add_option("--n", build_args.n);
  cat_build->add_option("--m", build_args.m);
  cat_build->add_option("--l", build_args.l);
  cat_build->add_option("--genus", build_args.g);
  cat_build->add_option("--holes", build_args.h);
  cat_build->add_option("-o,--output", out_path, "output file (default stdout)");

  int n_max = 6, m_max = 6;
  auto* cat_manifest = catalog->add_subcommand("manifest", "list entries with expected invariants");
  cat_manifest->add_option("--n-max", n_max);
  cat_manifest->add_option("--m-max", m_max);
  cat_manifest->add_option("-o,--output", out_path);
  auto* cat_verify = catalog->add_subcommand("verify", "cross-check every entry, one JSON report per line");
  cat_verify->add_option("--n-max", n_max);
  cat_verify->add_option("--m-max", m_max);

  // sum
  auto* sum = app.add_subcommand("sum", "corner connected sum of two diagrams");
  std::string file_a, file_b;
  std::vector<std::string> at_refs;
  sum->add_option("a", file_a)->required();
  sum->add_option("b", file_b)->required();
  sum->add_option("--at", at_refs, "corner refs 'A:<corner>' 'B:<corner>'")
      ->expected(2)
      ->required();
  sum->add_option("-o,--output", out_path);

  // selfsum
  auto* selfsum = app.add_subcommand("selfsum", "self connected sum at two corners");
  std::string file_self;
  std::vector<std::string> self_refs;
  selfsum->add_option("a", file_self)->required();
  selfsum->add_option("--at", self_refs, "two corner refs")->expected(2)->required();
  selfsum->add_option("-o,--output", out_path);

  // trade
  auto* trade = app.add_subcommand("trade", "singularity trades");
  trade->require_subcommand(1);
  std::string trade_file, trade_corner, trade_lefschetz;
  int trade_circle = 0;
  bool record_cycle = false, assert_dual = false;
  std::string cyc_lef, cyc_ell, basis_tag;
  auto* smooth = trade->add_subcommand("smooth", "corner -> Lefschetz point");
  smooth->add_option("a", trade_file)->required();
  smooth->add_option("--corner", trade_corner)->required();
  smooth->add_flag("--record-cycle", record_cycle, "record the vanishing-cycle pair");
  smooth->add_option("-o,--output", out_path);
  auto* singularize = trade->add_subcommand("singularize", "Lefschetz point -> corner");
  singularize->add_option("a", trade_file)->required();
  singularize->add_option("--lefschetz", trade_lefschetz)->required();
  singularize->add_option("--circle", trade_circle)->required();
  singularize->add_flag("--assert-dual-pair", assert_dual);
  singularize->add_option("--cycle-lefschetz", cyc_lef, "'a,b'");
  singularize->add_option("--cycle-elliptic", cyc_ell, "'a,b'");
  singularize->add_option("--basis", basis_tag);
  singularize->add_option("-o,--output", out_path);

  // invariants / check / render
  auto* invariants = app.add_subcommand("invariants", "diagram-derived invariant report");
  std::string file_inv;
  invariants->add_option("a", file_inv)->required();

  auto* check = app.add_subcommand("check", "existence criteria");
  check->require_subcommand(1);
  auto* check_gcs = check->add_subcommand("gcs", "stable generalized complex criterion");
  std::string file_check, gcs_mode = "per-component";
  check_gcs->add_option("a", file_check)->required();
  check_gcs->add_option("--mode", gcs_mode)->check(CLI::IsMember({"per-component", "total"}));

  auto* render = app.add_subcommand("render", "emit an SVG picture of the base diagram");
  std::string file_render;
  render->add_option("a", file_render)->required();
  render->add_option("-o,--output", out_path);

  auto* verify_charts = app.add_subcommand("verify-charts", "numeric gluing-model checks");
  int samples = 1000;
  std::uint64_t seed = 7;
  verify_charts->add_option("--samples", samples);
  verify_charts->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cat_build->parsed()) {
      emit(blf::serialize_diagram(build_entry(build_args).diagram), out_path);
    } else if (cat_manifest->parsed()) {
      json list = json::array();
      for (const auto& entry : blf::standard_manifest(n_max, m_max)) {
        json j = json::object();
        j["name"] = entry.name;
        j["betti"] = betti_to_json(entry.betti);
        j["expected"] = report_to_json(blf::compute_invariants(entry.diagram));
        list.push_back(std::move(j));
      }
      emit(list.dump(2) + "\n", out_path);
    } else if (cat_verify->parsed()) {
      bool all_ok = true;
      for (const auto& entry : blf::standard_manifest(n_max, m_max)) {
        json j = json::object();
        j["name"] = entry.name;
        try {
          j["report"] = report_to_json(blf::verify_entry(entry));
          j["ok"] = true;
        } catch (const blf::DiscrepancyError& e) {
          j["ok"] = false;
          j["error"] = e.what();
          all_ok = false;
        }
        std::cout << j.dump() << "\n";
      }
      if (!all_ok) {
        std::cerr << "catalog verify: discrepancies found\n";
        return 2;
      }
    } else if (sum->parsed()) {
      auto da = load_diagram(file_a);
      auto db = load_diagram(file_b);
      std::string ra, rb;
      for (const auto& token : at_refs) {
        if (token.rfind("A:", 0) == 0) {
          ra = token.substr(2);
        } else if (token.rfind("B:", 0) == 0) {
          rb = token.substr(2);
        } else {
          throw blf::ParseError("--at refs must look like A:<corner> / B:<corner>");
        }
      }
      if (ra.empty() || rb.empty()) {
        throw blf::ParseError("--at needs one A: ref and one B: ref");
      }
      auto result = blf::corner_connected_sum(da, corner_ref(da, ra), db, corner_ref(db, rb));
      emit(blf::serialize_diagram(result), out_path);
    } else if (selfsum->parsed()) {
      auto d = load_diagram(file_self);
      auto result =
          blf::self_connected_sum(d, corner_ref(d, self_refs[0]), corner_ref(d, self_refs[1]));
      emit(blf::serialize_diagram(result), out_path);
    } else if (smooth->parsed()) {
      auto d = load_diagram(trade_file);
      auto result = blf::trade_corner_to_lefschetz(d, corner_ref(d, trade_corner), record_cycle);
      emit(blf::serialize_diagram(result), out_path);
    } else if (singularize->parsed()) {
      auto d = load_diagram(trade_file);
      blf::DualPairEvidence evidence;
      if (assert_dual) {
        evidence = blf::DualPairEvidence::assertion();
      } else if (!cyc_lef.empty() || !cyc_ell.empty() || !basis_tag.empty()) {
        if (cyc_lef.empty() || cyc_ell.empty() || basis_tag.empty()) {
          throw blf::EvidenceError(
              "evidence needs --cycle-lefschetz, --cycle-elliptic and --basis together");
        }
        evidence =
            blf::DualPairEvidence::cycles(parse_cycle(cyc_lef), parse_cycle(cyc_ell), basis_tag);
      }
      auto result = blf::trade_lefschetz_to_corner(d, trade_lefschetz, trade_circle, evidence);
      emit(blf::serialize_diagram(result), out_path);
    } else if (invariants->parsed()) {
      auto d = load_diagram(file_inv);
      std::cout << report_to_json(blf::compute_invariants(d)).dump(2) << "\n";
    } else if (check_gcs->parsed()) {
      auto d = load_diagram(file_check);
      const auto mode =
          gcs_mode == "total" ? blf::GcsMode::total : blf::GcsMode::per_component;
      json j = json::object();
      j["mode"] = gcs_mode;
      j["admits_stable_gcs"] = blf::admits_stable_gcs(d, mode);
      std::cout << j.dump(2) << "\n";
    } else if (render->parsed()) {
      emit(blf::render_svg(load_diagram(file_render)), out_path);
    } else if (verify_charts->parsed()) {
      if (const char* env_seed = std::getenv("BLF_SEED")) {
        seed = std::strtoull(env_seed, nullptr, 10);
      }
      const auto corner = blf::verify_corner_sum_model(samples, seed);
      const auto focus = blf::verify_focus_focus_model(samples, seed);
      std::cout << model_report_to_json(corner).dump() << "\n";
      std::cout << model_report_to_json(focus).dump() << "\n";
      if (!corner.pass || !focus.pass) {
        std::cerr << "verify-charts: model check failed\n";
        return 2;
      }
    }
  } catch (const blf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const blf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

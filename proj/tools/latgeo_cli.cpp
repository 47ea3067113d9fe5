// latgeo command-line front end: exact lattice-geometry computations with
// stable JSON I/O. Exit codes: 0 success, 1 verification failure, 2 invalid
// input or schema.
#include <latgeo/catalog.hpp>
#include <latgeo/json_io.hpp>
#include <latgeo/kempty.hpp>
#include <latgeo/lemmas.hpp>
#include <latgeo/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace latgeo;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << std::endl;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text << std::endl;
  }
  void write(const Json& j) const { write(j.dump(2)); }
};

Json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open input file " + path);
  return Json::parse(is);
}

Json triangle_json(const kempty::StandardTriangle& st) {
  Json j;
  j["a"] = std::to_string(st.a);
  j["x"] = std::to_string(st.x);
  j["y"] = std::to_string(st.y);
  j["vertices"] = triangle_to_json(st.triangle(), st.k).at("vertices");
  return j;
}

int run_snf(const std::string& in, const Output& out) {
  IntMat m = intmat_from_json(load_json(in).at("matrix"));
  out.write(snf_to_json(snf(m)));
  return kExitOk;
}

int run_polytope_check(const std::string& in, std::optional<long long> k, const Output& out) {
  VPolytope p = polytope_from_json(load_json(in));
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["d"] = p.dim();
  j["affine_dim"] = p.affine_dim();
  Json pts = Json::array();
  for (const auto& q : p.lattice_points()) pts.push_back(intvec_to_json(q));
  j["lattice_points"] = pts;
  if (k) {
    Json kf = Json::array();
    for (const auto& q : p.k_fold_points(*k)) kf.push_back(intvec_to_json(q));
    j["k"] = std::to_string(*k);
    j["k_fold_points"] = kf;
    j["k_empty"] = p.is_k_empty(*k);
  }
  RatVec zero(p.dim(), Rat(0));
  if (p.is_vertex(zero) && p.affine_dim() == p.dim()) {
    auto gor = q_gorenstein(p);
    if (gor) {
      Json g;
      g["alpha"] = intvec_to_json(gor->alpha);
      g["iota"] = to_string(gor->index);
      j["q_gorenstein"] = g;
      auto canon = is_canonical_polytope(p);
      j["canonical"] = canon.ok;
      if (canon.witness) j["canonical_witness"] = intvec_to_json(*canon.witness);
      auto term = is_terminal_polytope(p);
      j["terminal"] = term.ok;
      if (term.witness) j["terminal_witness"] = intvec_to_json(*term.witness);
    } else {
      j["q_gorenstein"] = nullptr;
    }
  }
  out.write(j);
  return kExitOk;
}

int run_sporadic(long long k, const Output& out) {
  auto list = kempty::enumerate_sporadic_minimal(k);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = k;
  j["count"] = list.size();
  Json tris = Json::array();
  for (const auto& st : list) tris.push_back(triangle_json(st));
  j["triangles"] = tris;
  out.write(j);
  return kExitOk;
}

int run_standard_form(const std::string& in, const Output& out) {
  auto [t, k] = triangle_from_json(load_json(in));
  auto [st, aff] = kempty::standard_form(t, k);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = std::to_string(k);
  j["standard_form"] = triangle_json(st);
  Json ja;
  ja["a"] = Json::array({Json::array({std::to_string(aff.a[0][0]), std::to_string(aff.a[0][1])}),
                         Json::array({std::to_string(aff.a[1][0]), std::to_string(aff.a[1][1])})});
  ja["w"] = Json::array({std::to_string(aff.w.x), std::to_string(aff.w.y)});
  j["transform"] = ja;
  out.write(j);
  return kExitOk;
}

int run_strips(long long k, const Output& out) {
  auto strips = kempty::farey_strips(k);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = k;
  j["count"] = strips.size();
  Json arr = Json::array();
  for (const auto& s : strips) {
    Json js;
    js["f"] = std::to_string(s.f.f1) + "/" + std::to_string(s.f.f2);
    js["upper_strict"] = s.upper_strict;
    arr.push_back(std::move(js));
  }
  j["strips"] = arr;
  out.write(j);
  return kExitOk;
}

int run_matrix_check(const std::string& in, const Output& out) {
  DefiningMatrix p = matrix_from_json(load_json(in));
  auto check = validate(p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (!check.ok()) {
    j["valid"] = false;
    j["issues"] = check.issues;
    out.write(j);
    return kExitBadInput;
  }
  j["valid"] = true;
  bool lt = is_log_terminal(p);
  j["log_terminal"] = lt;
  if (!lt) {
    j["canonical"] = false;
    j["terminal"] = false;
    out.write(j);
    return kExitOk;
  }
  try {
    auto info = normal_form_info(p);
    auto v = verdict(p);
    j["canonical"] = v.canonical;
    j["terminal"] = v.terminal;
    j["iota"] = to_string(info.iota);
    j["zeta"] = to_string(info.zeta);
    j["case"] = to_string(info.case_id);
    if (info.case_id == NFCase::VI) j["mu"] = to_string(info.mu);
    Json ws = Json::array();
    for (const auto& w : v.witnesses) {
      Json jw;
      jw["kind"] = w.kind == VerdictWitness::Kind::OffPlane ? "off_plane" : "on_plane_non_column";
      jw["leaf"] = w.point.leaf;
      jw["point"] = ratvec_to_json(leaf_point_global(w.point, p.r()));
      ws.push_back(std::move(jw));
    }
    j["witnesses"] = ws;
  } catch (const std::runtime_error& e) {
    j["error"] = e.what();
    out.write(j);
    return kExitBadInput;
  }
  out.write(j);
  return kExitOk;
}

int run_matrix_classgroup(const std::string& in, const Output& out) {
  DefiningMatrix p = matrix_from_json(load_json(in));
  auto check = validate(p);
  if (!check.ok()) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["valid"] = false;
    j["issues"] = check.issues;
    out.write(j);
    return kExitBadInput;
  }
  auto [cl, q] = class_group(p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["free_rank"] = cl.free_rank;
  j["torsion"] = intvec_to_json(cl.torsion);
  Json rows = Json::array();
  for (size_t i = 0; i < q.torsion_rows.size(); ++i) {
    Json row;
    row["modulus"] = to_string(q.torsion_moduli[i]);
    row["row"] = intvec_to_json(q.torsion_rows[i]);
    rows.push_back(std::move(row));
  }
  j["degree_matrix_torsion"] = rows;
  Json frees = Json::array();
  for (const auto& row : q.free_rows) frees.push_back(intvec_to_json(row));
  j["degree_matrix_free"] = frees;
  auto pres = cox_presentation(p);
  j["variables"] = pres.variables;
  Json rels = Json::array();
  for (const auto& rel : pres.relations) {
    Json jr = Json::array();
    for (const auto& mono : rel.monomials) {
      Json jm;
      jm["coeff"] = to_string(mono.coeff);
      jm["exponents"] = intvec_to_json(mono.exponents);
      jr.push_back(std::move(jm));
    }
    rels.push_back(std::move(jr));
  }
  j["relations"] = rels;
  KElement kx = anticanonical_class(p);
  Json jk;
  jk["torsion"] = intvec_to_json(kx.torsion_coords);
  jk["free"] = intvec_to_json(kx.free_coords);
  jk["order"] = to_string(k_element_order(q, kx));
  j["anticanonical_class"] = jk;
  out.write(j);
  return kExitOk;
}

int run_catalog_list(const Output& out) {
  const Json& data = catalog_data();
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json entries = Json::array();
  for (const auto& e : data.at("entries")) {
    Json je;
    je["id"] = e.at("id");
    je["aliases"] = e.at("aliases");
    je["kind"] = e.at("kind");
    if (e.contains("constraints")) je["constraints"] = e.at("constraints");
    if (e.contains("grid")) je["grid_points"] = e.at("grid").size();
    if (e.contains("grid_spec")) je["grid_spec"] = e.at("grid_spec");
    if (e.contains("note")) je["note"] = e.at("note");
    entries.push_back(std::move(je));
  }
  j["entries"] = entries;
  Json ncs = Json::array();
  for (const auto& nc : data.at("negative_controls")) ncs.push_back(nc.at("id"));
  j["negative_controls"] = ncs;
  out.write(j);
  return kExitOk;
}

int run_catalog_show(const std::string& id, const std::string& params_text, const Output& out) {
  Json params = params_text.empty() ? Json::object() : Json::parse(params_text);
  auto inst = instantiate(id, params);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = id;
  j["params"] = params;
  if (std::holds_alternative<MatrixInstance>(inst)) {
    const auto& mi = std::get<MatrixInstance>(inst);
    j["kind"] = "matrix";
    j["matrix"] = matrix_to_json(mi.matrix);
    j["expected"] = Json{{"case", to_string(mi.expected_case)},
                         {"iota", to_string(mi.expected_iota)},
                         {"zeta", to_string(mi.expected_zeta)},
                         {"canonical", mi.expected_canonical},
                         {"terminal", mi.expected_terminal}};
  } else {
    const auto& ti = std::get<ToricInstance>(inst);
    j["kind"] = "toric";
    j["polytope"] = polytope_to_json(ti.polytope);
    j["expected"] = Json{{"iota", to_string(ti.expected_iota)},
                         {"terminal", ti.expected_terminal}};
  }
  out.write(j);
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& format, const Output& out) {
  auto reports = verify_paper(suite.empty() ? "all" : suite);
  bool all = true;
  for (const auto& r : reports) all = all && r.all_pass();
  if (format == "text") {
    std::string text;
    for (const auto& r : reports) text += report_to_text(r);
    text += all ? "RESULT: PASS" : "RESULT: FAIL";
    out.write(text);
  } else {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["pass"] = all;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["suites"] = arr;
    out.write(j);
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice geometry: k-empty triangles, canonical polytopes, "
               "defining matrices and class groups"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--out", out.path, "write the JSON/text result to a file instead of stdout");

  std::string in_path, suite, format = "json", entry_id, params_text;
  long long k_value = 1;
  std::optional<long long> k_opt;

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--in", in_path, "input JSON {\"matrix\": [[...]]}")->required();

  auto* poly = app.add_subcommand("polytope", "polytope operations");
  poly->require_subcommand(1);
  auto* poly_check = poly->add_subcommand("check", "lattice points, emptiness, canonicity");
  poly_check->add_option("--in", in_path, "polytope JSON file")->required();
  poly_check->add_option("--k", k_value, "also report k-fold data");

  auto* kempty_cmd = app.add_subcommand("kempty", "k-empty triangle machinery");
  kempty_cmd->require_subcommand(1);
  auto* sporadic = kempty_cmd->add_subcommand("sporadic", "enumerate sporadic minimal triangles");
  sporadic->add_option("--k", k_value, "the k of k-emptiness")->required();
  auto* standard = kempty_cmd->add_subcommand("standard-form", "standard form of a triangle");
  standard->add_option("--in", in_path, "triangle JSON file")->required();
  auto* strips = kempty_cmd->add_subcommand("strips", "list the Farey strips");
  strips->add_option("--k", k_value, "strip order")->required();

  auto* matrix = app.add_subcommand("matrix", "defining-matrix operations");
  matrix->require_subcommand(1);
  auto* mcheck = matrix->add_subcommand("check", "validate and compute the verdict");
  mcheck->add_option("--in", in_path, "defining-matrix JSON file")->required();
  auto* mclass = matrix->add_subcommand("classgroup", "class group, grading, Cox data");
  mclass->add_option("--in", in_path, "defining-matrix JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in catalog");
  catalog->require_subcommand(1);
  auto* clist = catalog->add_subcommand("list", "list catalog entries");
  auto* cshow = catalog->add_subcommand("show", "instantiate one entry");
  cshow->add_option("--id", entry_id, "entry id, e.g. P_5 or toric_iii")->required();
  cshow->add_option("--params", params_text, "JSON parameter object");

  auto* verify = app.add_subcommand("verify-paper", "run the verification suites");
  verify->add_option("--suite", suite, "kempty|lemmas|toric|catalog (default: all)");
  verify->add_option("--report", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*snf_cmd) return run_snf(in_path, out);
    if (*poly_check) {
      if (poly_check->count("--k")) k_opt = k_value;
      return run_polytope_check(in_path, k_opt, out);
    }
    if (*sporadic) return run_sporadic(k_value, out);
    if (*standard) return run_standard_form(in_path, out);
    if (*strips) return run_strips(k_value, out);
    if (*mcheck) return run_matrix_check(in_path, out);
    if (*mclass) return run_matrix_classgroup(in_path, out);
    if (*clist) return run_catalog_list(out);
    if (*cshow) return run_catalog_show(entry_id, params_text, out);
    if (*verify) return run_verify(suite, format, out);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBadInput;
  }
  return kExitBadInput;
}

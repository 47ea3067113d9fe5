#include <latgeo/json_io.hpp>

#include <sstream>
#include <stdexcept>

namespace latgeo {

namespace {

BigInt jbig(const Json& v) {
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  throw std::invalid_argument("json: expected an integer (decimal string)");
}

Rat jrat(const Json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw std::invalid_argument("json: expected a rational (\"p/q\" string)");
}

}  // namespace

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(to_string(e));
  return a;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(to_string(e));
  return a;
}

Json intmat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) rows.push_back(intvec_to_json(m.row(r)));
  return rows;
}

IntMat intmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("json: matrix must be a nonempty array of rows");
  size_t rows = j.size(), cols = j.at(0).size();
  IntMat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("json: ragged matrix");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = jbig(j.at(r).at(c));
  }
  return m;
}

Json polytope_to_json(const VPolytope& p) {
  Json out;
  out["d"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(ratvec_to_json(v));
  out["vertices"] = verts;
  return out;
}

VPolytope polytope_from_json(const Json& j) {
  size_t d = j.at("d").get<size_t>();
  std::vector<RatVec> pts;
  for (const auto& row : j.at("vertices")) {
    RatVec p;
    for (const auto& c : row) p.push_back(jrat(c));
    pts.push_back(std::move(p));
  }
  return VPolytope(d, std::move(pts));
}

Json matrix_to_json(const DefiningMatrix& p) {
  Json out;
  out["r"] = std::to_string(p.r());
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json jb;
    jb["l"] = intvec_to_json(b.l);
    Json pen = Json::array(), last = Json::array();
    for (const auto& d : b.d) {
      pen.push_back(to_string(d[0]));
      last.push_back(to_string(d[1]));
    }
    jb["d"] = Json::array({pen, last});
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = blocks;
  Json dp = Json::array();
  for (const auto& d : p.dprime) dp.push_back(Json::array({to_string(d[0]), to_string(d[1])}));
  out["dprime"] = dp;
  return out;
}

DefiningMatrix matrix_from_json(const Json& j) {
  DefiningMatrix p;
  for (const auto& jb : j.at("blocks")) {
    Block b;
    for (const auto& l : jb.at("l")) b.l.push_back(jbig(l));
    const Json& d = jb.at("d");
    if (!d.is_array() || d.size() != 2 || d.at(0).size() != b.l.size() ||
        d.at(1).size() != b.l.size())
      throw std::invalid_argument("json: block d must be a 2 x n_i array");
    for (size_t c = 0; c < b.l.size(); ++c)
      b.d.push_back({jbig(d.at(0).at(c)), jbig(d.at(1).at(c))});
    p.blocks.push_back(std::move(b));
  }
  if (j.contains("dprime"))
    for (const auto& col : j.at("dprime")) {
      if (col.size() != 2) throw std::invalid_argument("json: dprime columns are pairs");
      p.dprime.push_back({jbig(col.at(0)), jbig(col.at(1))});
    }
  if (j.contains("r")) {
    BigInt r = jbig(j.at("r"));
    if (r != p.r()) throw std::invalid_argument("json: declared r does not match block count");
  }
  return p;
}

Json triangle_to_json(const kempty::LatticeTriangle& t, long long k) {
  Json out;
  out["k"] = std::to_string(k);
  Json verts = Json::array();
  for (const auto& v : {t.v0, t.v1, t.v2})
    verts.push_back(Json::array({std::to_string(v.x), std::to_string(v.y)}));
  out["vertices"] = verts;
  return out;
}

std::pair<kempty::LatticeTriangle, long long> triangle_from_json(const Json& j) {
  BigInt k = jbig(j.at("k"));
  const Json& verts = j.at("vertices");
  if (verts.size() != 3) throw std::invalid_argument("json: triangle needs three vertices");
  kempty::Pt pts[3];
  for (int i = 0; i < 3; ++i) {
    pts[i].x = jbig(verts.at(i).at(0)).convert_to<long long>();
    pts[i].y = jbig(verts.at(i).at(1)).convert_to<long long>();
  }
  return {{pts[0], pts[1], pts[2]}, k.convert_to<long long>()};
}

Json snf_to_json(const SmithDecomp& d) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["divisors"] = intvec_to_json(d.divisors);
  out["s"] = intmat_to_json(d.s);
  out["v"] = intmat_to_json(d.v);
  out["w"] = intmat_to_json(d.w);
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["suite"] = r.suite;
  out["pass"] = r.all_pass();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["id"] = e.id;
    if (!e.instance.empty()) je["instance"] = Json::parse(e.instance);
    je["pass"] = e.pass;
    je["detail"] = e.detail;
    je["ms"] = e.millis;
    entries.push_back(std::move(je));
  }
  out["entries"] = entries;
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  size_t passed = 0;
  for (const auto& e : r.entries) passed += e.pass;
  os << "suite " << r.suite << ": " << passed << "/" << r.entries.size() << " passed\n";
  for (const auto& e : r.entries) {
    os << (e.pass ? "  PASS " : "  FAIL ") << e.id;
    if (!e.instance.empty()) os << " " << e.instance;
    os << ": " << e.detail << "\n";
  }
  return os.str();
}

}  // namespace latgeo

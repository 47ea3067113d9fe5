#include <latgeo/catalog.hpp>

#include <latgeo/catalog_data.hpp>
#include <latgeo/lemmas.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace latgeo {

const Json& catalog_data() {
  static const Json data = Json::parse(detail::kCatalogJson);
  return data;
}

namespace {

[[noreturn]] void constraint_error(const std::string& id, const std::string& what) {
  throw std::invalid_argument("catalog " + id + ": constraint violated: " + what);
}

BigInt jint(const Json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  throw std::invalid_argument("catalog: parameter is not an integer");
}

BigInt param(const Json& params, const std::string& key) {
  if (!params.contains(key))
    throw std::invalid_argument("catalog: missing parameter '" + key + "'");
  return jint(params.at(key));
}

BigInt param_or(const Json& params, const std::string& key, const BigInt& dflt) {
  if (!params.contains(key)) return dflt;
  return jint(params.at(key));
}

IntVec param_vec(const Json& params, const std::string& key) {
  IntVec out;
  if (!params.contains(key)) return out;
  for (const auto& v : params.at(key)) out.push_back(jint(v));
  return out;
}

Block block1(BigInt l, BigInt d1, BigInt d2) {
  return Block{{std::move(l)}, {{std::move(d1), std::move(d2)}}};
}

// Pair block of exponent-one columns (e_i, (0,0)) and (e_i, (d, 0)).
Block unit_pair(const BigInt& d) {
  return Block{{1, 1}, {{BigInt(0), BigInt(0)}, {d, BigInt(0)}}};
}

void append_unit_pairs(DefiningMatrix& p, const IntVec& ds, const std::string& id) {
  for (const auto& d : ds) {
    if (d == 0) constraint_error(id, "trailing block offsets d_i must be nonzero");
    p.blocks.push_back(unit_pair(d));
  }
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), rr = m, old_s = 1, ss = 0;
  while (rr != 0) {
    BigInt q = old_r / rr;
    BigInt t = old_r - q * rr;
    old_r = rr;
    rr = t;
    t = old_s - q * ss;
    old_s = ss;
    ss = t;
  }
  if (old_r != 1) throw std::invalid_argument("catalog: modular inverse does not exist");
  return mod_floor(old_s, m);
}

struct Built {
  DefiningMatrix m;
  NFCase case_id;
  BigInt iota, zeta;
  std::optional<BigInt> mu;
  bool terminal = false;
};

using Builder = std::function<Built(const Json&)>;

Built fixed(DefiningMatrix m, NFCase c, BigInt iota, BigInt zeta,
            std::optional<BigInt> mu = std::nullopt) {
  return Built{std::move(m), c, std::move(iota), std::move(zeta), std::move(mu), false};
}

// ---- zeta = 1 ---------------------------------------------------------------

Built build_p1(const Json&) {
  DefiningMatrix p;
  p.blocks = {Block{{3, 1}, {{1, -4}, {0, 0}}}, block1(3, 0, 2), block1(2, -1, 2)};
  return fixed(std::move(p), NFCase::Zeta1, 2, 1);
}

Built build_p2(const Json&) {
  DefiningMatrix p;
  p.blocks = {Block{{3, 1}, {{1, -4}, {0, 0}}}, Block{{3, 1}, {{0, 2}, {-1, 2}}},
              block1(2, -1, 2)};
  return fixed(std::move(p), NFCase::Zeta1, 2, 1);
}

Built build_p3(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(3, 2, -6), Block{{2, 1}, {{0, 3}, {2, 3}}}, block1(2, 1, 3)};
  return fixed(std::move(p), NFCase::Zeta1, 3, 1);
}

Built build_p4(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(3, 0, -4), block1(2, 1, 2),
              Block{{1, 1}, {{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(2)}}}};
  return fixed(std::move(p), NFCase::Zeta1, 2, 1);
}

Built build_p5(const Json& params) {
  BigInt k = param(params, "l01");
  if (k < 2) constraint_error("P_5", "l01 >= 2");
  DefiningMatrix p;
  p.blocks = {block1(k, 1, 2 - 2 * k),
              Block{{1, 1}, {{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(2)}}},
              Block{{1, 1}, {{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(2)}}}};
  return fixed(std::move(p), NFCase::Zeta1, 2, 1);
}

// ---- zeta = 2, leading (4,3,2) ----------------------------------------------

DefiningMatrix base_432() {
  DefiningMatrix p;
  p.blocks = {block1(4, 0, 3), block1(3, 0, -2), block1(2, 1, 0)};
  return p;
}

Built build_p6(const Json&) {
  DefiningMatrix p = base_432();
  p.dprime = {{BigInt(5), BigInt(1)}};
  return fixed(std::move(p), NFCase::I, 2, 2);
}

Built build_p7(const Json&) {
  DefiningMatrix p = base_432();
  p.blocks[1] = Block{{3, 1}, {{0, -2}, {3, 0}}};
  return fixed(std::move(p), NFCase::I, 2, 2);
}

Built build_p8(const Json&) {
  Built b = build_p7({});
  b.m.dprime = {{BigInt(7), BigInt(1)}};
  return b;
}

Built build_p9(const Json&) {
  DefiningMatrix p = base_432();
  p.dprime = {{BigInt(5), BigInt(1)}, {BigInt(7), BigInt(1)}};
  return fixed(std::move(p), NFCase::I, 2, 2);
}

Built build_p10(const Json&) {
  DefiningMatrix p = base_432();
  p.blocks[1] = Block{{3, 1, 1}, {{0, -2}, {3, 0}, {5, 0}}};
  return fixed(std::move(p), NFCase::I, 2, 2);
}

// ---- zeta = 3, leading (3,3,2) ----------------------------------------------

Built build_p11(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(3, 1, 0), block1(3, 0, 2), block1(2, 0, -1)};
  p.dprime = {{BigInt(1), BigInt(1)}};
  return fixed(std::move(p), NFCase::II, 3, 3);
}

Built build_p12(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(3, 1, 0), block1(3, 0, 2), Block{{2, 1}, {{0, -1}, {0, 0}}}};
  return fixed(std::move(p), NFCase::II, 3, 3);
}

// ---- zeta = 4, leading (2k+1,2,2): series 56a / 56b --------------------------

Block leading_odd_block(const IntVec& ks, const IntVec& d0s, const std::string& id) {
  if (ks.empty() || ks.size() != d0s.size())
    constraint_error(id, "k and d0 must be nonempty and equally long");
  Block b;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) constraint_error(id, "k_i >= 1");
    b.l.push_back(2 * ks[i] + 1);
    b.d.push_back({d0s[i], -ks[i]});
  }
  return b;
}

Built build_p13(const Json& params) {
  BigInt r = param(params, "r");
  if (r < 2) constraint_error("P_13", "r >= 2");
  Block b0 = leading_odd_block(param_vec(params, "k"), param_vec(params, "d0"), "P_13");
  DefiningMatrix p;
  p.blocks = {std::move(b0), block1(2, 1, 0), block1(2, 1, 1)};
  IntVec ds = param_vec(params, "d");
  if (ds.size() + 2 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error("P_13", "need r-2 trailing offsets d");
  append_unit_pairs(p, ds, "P_13");
  return fixed(std::move(p), NFCase::III, 2, 4);
}

Built build_p14(const Json& params) {
  BigInt r = param(params, "r");
  if (r < 2) constraint_error("P_14", "r >= 2");
  BigInt d2 = param(params, "d2");
  if (d2 == 1) constraint_error("P_14", "d2 != 1 (columns must be distinct)");
  Block b0 = leading_odd_block(param_vec(params, "k"), param_vec(params, "d0"), "P_14");
  DefiningMatrix p;
  p.blocks = {std::move(b0), block1(2, 1, 0), Block{{2, 2}, {{BigInt(1), BigInt(1)}, {d2, BigInt(1)}}}};
  IntVec ds = param_vec(params, "d");
  if (ds.size() + 2 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error("P_14", "need r-2 trailing offsets d");
  append_unit_pairs(p, ds, "P_14");
  return fixed(std::move(p), NFCase::III, 2, 4);
}

// ---- zeta = 2, leading (2k,2,2) ----------------------------------------------

Built build_p15(const Json& params) {
  BigInt k = param(params, "k");
  if (k < 2) constraint_error("P_15", "k >= 2");
  DefiningMatrix p;
  p.blocks = {block1(2 * k, 1, 1 - k), block1(2, 1, 2), block1(2, 1, -1)};
  p.dprime = {{2 * k + 2, BigInt(1)}};
  return fixed(std::move(p), NFCase::IV, 2, 2);
}

Built build_p16(const Json& params) {
  Built b = build_p15(params);
  BigInt k = param(params, "k");
  b.m.dprime = {{2 * k, BigInt(1)}, {2 * k + 2, BigInt(1)}};
  return b;
}

Built build_p17(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(4, 1, -1), block1(2, 1, 2), Block{{2, 1}, {{1, -1}, {4, 0}}}};
  return fixed(std::move(p), NFCase::IV, 2, 2);
}

Built build_p18(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(4, 1, -1), block1(2, 1, 2),
              Block{{2, 1, 1}, {{1, -1}, {2, 0}, {4, 0}}}};
  return fixed(std::move(p), NFCase::IV, 2, 2);
}

Built build_p19(const Json&) {
  Built b = build_p17({});
  b.m.dprime = {{BigInt(4), BigInt(1)}};
  return b;
}

// ---- zeta = 2, leading (k,2,2): series 57a and P_21 ---------------------------

Built build_p20(const Json& params) {
  BigInt r = param(params, "r");
  if (r < 2) constraint_error("P_20", "r >= 2");
  IntVec ks = param_vec(params, "k"), d0s = param_vec(params, "d0");
  if (ks.empty() || ks.size() != d0s.size())
    constraint_error("P_20", "k and d0 must be nonempty and equally long");
  Block b0;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 2) constraint_error("P_20", "k_i >= 2");
    b0.l.push_back(ks[i]);
    b0.d.push_back({d0s[i], 1 - ks[i]});
  }
  DefiningMatrix p;
  p.blocks = {std::move(b0), block1(2, 1, 0), block1(2, 1, 2)};
  IntVec ds = param_vec(params, "d");
  if (ds.size() + 2 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error("P_20", "need r-2 trailing offsets d");
  append_unit_pairs(p, ds, "P_20");
  IntVec dp = param_vec(params, "dprime");
  if (dp.size() > 2) constraint_error("P_20", "at most two lineality columns");
  for (const auto& v : dp) p.dprime.push_back({v, BigInt(1)});
  return fixed(std::move(p), NFCase::V, 2, 2);
}

Built build_p21(const Json& params) {
  BigInt k = param(params, "k");
  if (k < 1) constraint_error("P_21", "k >= 1");
  DefiningMatrix p;
  p.blocks = {block1(2 * k + 1, -k, -4 * k), block1(2, 0, 1), block1(2, 1, 3)};
  p.dprime = {{BigInt(1), BigInt(2)}};
  return fixed(std::move(p), NFCase::V, 4, 2);
}

// ---- case (vi) fixed matrices -------------------------------------------------

Built build_p22(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(4, 1, -1), block1(4, 0, 3), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, 2, BigInt(1));
}

Built build_p23(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(4, 0, 3), block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, 2, BigInt(-1));
}

Built build_p24(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(8, 0, 5), block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, 2, BigInt(-1));
}

Built build_p25(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(2, 1, 1), block1(2, 0, 3), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 4, 2, BigInt(1));
}

Built build_p26(const Json& params) {
  BigInt r = param(params, "r");
  if (r < 2) constraint_error("P_26", "r >= 2");
  DefiningMatrix p;
  p.blocks = {block1(2, 1, 0), block1(2, 1, 2)};
  IntVec ds = param_vec(params, "d");
  if (ds.size() + 1 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error("P_26", "need r-1 trailing offsets d");
  append_unit_pairs(p, ds, "P_26");
  IntVec dp = param_vec(params, "dprime");
  if (dp.size() > 2) constraint_error("P_26", "at most two lineality columns");
  for (const auto& v : dp) p.dprime.push_back({v, BigInt(1)});
  return fixed(std::move(p), NFCase::VI, 2, 2, BigInt(1));
}

Built build_p27(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(3, 0, 2), block1(3, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, 3, BigInt(-1));
}

Built build_p28(const Json&) {
  DefiningMatrix p;
  p.blocks = {block1(5, 0, -1), block1(4, 1, 2), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, 3, BigInt(1));
}

Built build_p29(const Json& params) {
  BigInt m0 = param(params, "m0"), z = param(params, "zeta");
  if (m0 < 3) constraint_error("P_29", "m0 >= 3");
  if (mod_floor(z, 4) != 0) constraint_error("P_29", "zeta = 0 mod 4");
  DefiningMatrix p;
  p.blocks = {block1(m0 * z - 2, 1, 1 + m0 * (2 - z) / 2), block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, (z - 2) / 2);
}

Built build_p30(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 3) constraint_error("P_30", "zeta >= 3");
  DefiningMatrix p;
  p.blocks = {block1(5 * z - 2, 0, 5), block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, BigInt(-1));
}

Built build_p31(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 5 || mod_floor(z, 2) != 1) constraint_error("P_31", "zeta odd >= 5");
  DefiningMatrix p;
  p.blocks = {block1(3 * z - 4, 0, (7 - 3 * z) / 2), block1(4, 1, 2), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, (z - 1) / 2);
}

Built zeta_ge3(const Json& params, const std::string& id) {
  BigInt z = param(params, "zeta");
  if (z < 3) constraint_error(id, "zeta >= 3");
  Built b;
  b.zeta = z;
  return b;
}

Built build_p32(const Json& params) {
  Built b = zeta_ge3(params, "P_32");
  DefiningMatrix p;
  p.blocks = {block1(3 * b.zeta - 2, 0, 3), block1(2, 1, 0), unit_pair(1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, b.zeta, BigInt(-1));
}

Built build_p33(const Json& params) {
  Built b = zeta_ge3(params, "P_33");
  DefiningMatrix p;
  p.blocks = {block1(3 * b.zeta - 2, 0, 3), block1(2, 1, 0), unit_pair(2)};
  return fixed(std::move(p), NFCase::VI, 2, b.zeta, BigInt(-1));
}

Built build_p34(const Json& params) {
  Built b = zeta_ge3(params, "P_34");
  DefiningMatrix p;
  p.blocks = {block1(3 * b.zeta - 2, 0, 3), block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, b.zeta, BigInt(-1));
}

Built build_p35(const Json& params) {
  Built b = zeta_ge3(params, "P_35");
  BigInt z = b.zeta;
  DefiningMatrix p;
  p.blocks = {Block{{3 * z - 2, 3 * z - 2}, {{BigInt(0), BigInt(3)}, {BigInt(1), BigInt(3)}}},
              block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, BigInt(-1));
}

Built build_p36(const Json& params) {
  Built b = zeta_ge3(params, "P_36");
  BigInt z = b.zeta;
  DefiningMatrix p;
  p.blocks = {Block{{3 * z - 2, z - 2}, {{BigInt(0), BigInt(3)}, {BigInt(3), BigInt(1)}}},
              block1(2, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, BigInt(-1));
}

// ---- series 58a-c -------------------------------------------------------------

struct S58 {
  BigInt z, k, mu, c0, c1, cm;
};

S58 series58_params(const Json& params, const std::string& id) {
  S58 s;
  s.z = param(params, "zeta");
  s.k = param(params, "k");
  s.mu = param(params, "mu");
  if (s.k < 1 || s.z <= s.k) constraint_error(id, "zeta > k >= 1");
  if (s.mu < 1 || s.mu >= s.z) constraint_error(id, "1 <= mu <= zeta-1");
  if (mod_floor(s.k * s.mu + 1, s.z) != 0) constraint_error(id, "k*mu+1 = 0 mod zeta");
  BigInt q = (s.k * s.mu + 1) / s.z;
  s.c0 = 2 * (q - s.mu);
  s.c1 = 2 * q;
  s.cm = 2 * q - s.mu;  // case-(vi) value for an l = zeta-2k block-0 column
  return s;
}

DefiningMatrix base58(const S58& s, const Json& params, const std::string& id) {
  DefiningMatrix p;
  p.blocks = {block1(2 * (s.z - s.k), 1, s.c0), block1(2 * s.k, 1, s.c1)};
  BigInt r = param(params, "r");
  if (r < 2) constraint_error(id, "r >= 2");
  IntVec ds = param_vec(params, "d");
  if (ds.size() + 1 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error(id, "need r-1 trailing offsets d");
  append_unit_pairs(p, ds, id);
  return p;
}

Built build_p37(const Json& params) {
  S58 s = series58_params(params, "P_37");
  return fixed(base58(s, params, "P_37"), NFCase::VI, 2, s.z, s.mu);
}

Built build_p38(const Json& params) {
  S58 s = series58_params(params, "P_38");
  if (s.z <= 2 * s.k) constraint_error("P_38", "zeta > 2k");
  BigInt d11 = param(params, "d11");
  if (d11 > 0) constraint_error("P_38", "d11 <= 0");
  DefiningMatrix p = base58(s, params, "P_38");
  p.blocks[0].l.push_back(s.z - 2 * s.k);
  p.blocks[0].d.push_back({d11, s.cm});
  return fixed(std::move(p), NFCase::VI, 2, s.z, s.mu);
}

Built build_p39(const Json& params) {
  S58 s = series58_params(params, "P_39");
  if (s.z <= 2 * s.k) constraint_error("P_39", "zeta > 2k");
  BigInt d11 = param(params, "d11"), d12 = param(params, "d12");
  if (d11 > 0) constraint_error("P_39", "d11 <= 0");
  BigInt dsum = 0;
  for (const auto& d : param_vec(params, "d")) dsum += d;
  if (d12 < 2 + s.k * dsum) constraint_error("P_39", "d12 >= 2 + k * sum(d_i)");
  DefiningMatrix p = base58(s, params, "P_39");
  p.blocks[0].l.push_back(s.z - 2 * s.k);
  p.blocks[0].d.push_back({d11, s.cm});
  p.blocks[0].l.push_back(s.z - 2 * s.k);
  p.blocks[0].d.push_back({d12, s.cm});
  return fixed(std::move(p), NFCase::VI, 2, s.z, s.mu);
}

// ---- zeta = 5 mod 6 family P_40..P_49 ------------------------------------------

BigInt z_5mod6(const Json& params, const std::string& id) {
  BigInt z = param(params, "zeta");
  if (z < 5 || mod_floor(z, 6) != 5) constraint_error(id, "zeta = 5 mod 6");
  return z;
}

Built build_p40(const Json& params) {
  BigInt z = z_5mod6(params, "P_40");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 1, 4 - z), block1(2, 0, 1), unit_pair(1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p41(const Json& params) {
  BigInt z = z_5mod6(params, "P_41");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 1, 4 - z), block1(2, 0, 1), unit_pair(2)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p42(const Json& params) {
  BigInt z = z_5mod6(params, "P_42");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 1, 4 - z), block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p43(const Json& params) {
  BigInt z = z_5mod6(params, "P_43");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 2, 4 - z), block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p44(const Json& params) {
  BigInt z = z_5mod6(params, "P_44");
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 2, 2 * z - 2}, {{BigInt(1), 4 - z}, {BigInt(2), 4 - z}}},
              block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p45(const Json& params) {
  BigInt z = z_5mod6(params, "P_45");
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 2, 2 * z - 2}, {{BigInt(1), 4 - z}, {BigInt(2), 4 - z}}},
              Block{{2, 2}, {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p46(const Json& params) {
  BigInt z = z_5mod6(params, "P_46");
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 2, 2 * z - 2}, {{BigInt(1), 4 - z}, {BigInt(3), 4 - z}}},
              block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p47(const Json& params) {
  BigInt z = z_5mod6(params, "P_47");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 1, 4 - z),
              Block{{2, 2}, {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p48(const Json& params) {
  BigInt z = z_5mod6(params, "P_48");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 2, 1, 4 - z),
              Block{{2, 2}, {{BigInt(0), BigInt(1)}, {BigInt(2), BigInt(1)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

Built build_p49(const Json& params) {
  BigInt z = z_5mod6(params, "P_49");
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 2, z - 2}, {{BigInt(1), 4 - z}, {BigInt(2), (5 - z) / 2}}},
              block1(2, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 2);
}

// ---- l = 3 families P_50..P_57 ---------------------------------------------------

Built build_p50(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 4) constraint_error("P_50", "zeta >= 4");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 0, 2), block1(3, 1, 0), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, BigInt(-1));
}

Built build_p51(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 4) constraint_error("P_51", "zeta >= 4");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 0, 2),
              Block{{3, 3}, {{BigInt(1), BigInt(0)}, {BigInt(2), BigInt(0)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, BigInt(-1));
}

BigInt z_mod9(const Json& params, const std::string& id, long res) {
  BigInt z = param(params, "zeta");
  if (z < 6 || mod_floor(z, 9) != res) constraint_error(id, "zeta congruence mod 9");
  return z;
}

Built build_p52(const Json& params) {
  BigInt z = z_mod9(params, "P_52", 6);
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 1, (9 - 2 * z) / 3), block1(3, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, z / 3 - 1);
}

Built build_p53(const Json& params) {
  BigInt z = z_mod9(params, "P_53", 6);
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 1, (9 - 2 * z) / 3),
              Block{{3, 3}, {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, z / 3 - 1);
}

Built build_p54(const Json& params) {
  BigInt z = z_mod9(params, "P_54", 6);
  BigInt c = (9 - 2 * z) / 3;
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 3, 2 * z - 3}, {{BigInt(1), c}, {BigInt(2), c}}},
              block1(3, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, z / 3 - 1);
}

Built build_p55(const Json& params) {
  BigInt z = z_mod9(params, "P_55", 0);
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 1, (12 - 4 * z) / 3), block1(3, 0, 2), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, 2 * z / 3 - 1);
}

Built build_p56(const Json& params) {
  BigInt z = z_mod9(params, "P_56", 0);
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 3, 1, (12 - 4 * z) / 3),
              Block{{3, 3}, {{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(2)}}}, unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, 2 * z / 3 - 1);
}

Built build_p57(const Json& params) {
  BigInt z = z_mod9(params, "P_57", 0);
  BigInt c = (12 - 4 * z) / 3;
  DefiningMatrix p;
  p.blocks = {Block{{2 * z - 3, 2 * z - 3}, {{BigInt(1), c}, {BigInt(2), c}}},
              block1(3, 0, 2), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, 2 * z / 3 - 1);
}

Built build_p58(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 7 || mod_floor(z, 12) != 7) constraint_error("P_58", "zeta = 7 mod 12");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 4, 1, (5 - z) / 2), block1(4, 0, 1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, (z - 3) / 4);
}

Built build_p59(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 13 || mod_floor(z, 12) != 1) constraint_error("P_59", "zeta = 1 mod 12, zeta >= 13");
  DefiningMatrix p;
  p.blocks = {block1(2 * z - 4, 1, (9 - 3 * z) / 2), block1(4, 0, 3), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 3, z, 3 * (z - 1) / 4);
}

Built build_p60(const Json& params) {
  BigInt m0 = param(params, "m0"), z = param(params, "zeta");
  if (m0 < 2) constraint_error("P_60", "m0 >= 2");
  if (z < 3 || mod_floor(z, 2) != 1) constraint_error("P_60", "zeta odd >= 3");
  DefiningMatrix p;
  p.blocks = {block1(m0 * z - 1, 1, 2 * m0), unit_pair(1), unit_pair(1)};
  return fixed(std::move(p), NFCase::VI, 2, z, BigInt(-2));
}

Built build_p61(const Json& params) {
  BigInt z = param(params, "zeta");
  if (z < 5 || mod_floor(z, 2) != 1) constraint_error("P_61", "zeta odd >= 5");
  DefiningMatrix p;
  p.blocks = {block1(z - 2, -1, 2), block1(2, -1, 0), unit_pair(1)};
  Built b = fixed(std::move(p), NFCase::VI, 4, z, BigInt(-2));
  b.terminal = true;  // see catalog note: the derivation's boundary argument
  return b;
}

// ---- series 59a-d ----------------------------------------------------------------

struct S59 {
  BigInt iota, k, l, mu, d, z, c0, c1;
};

S59 series59_params(const Json& params, const std::string& id) {
  S59 s;
  s.iota = param(params, "iota");
  s.k = param(params, "k");
  s.l = param(params, "l");
  s.mu = param(params, "mu");
  s.d = param(params, "d");
  if (s.iota < 2) constraint_error(id, "iota >= 2");
  if (s.k < 1) constraint_error(id, "k >= 1");
  if (s.l < 2) constraint_error(id, "l >= 2");
  if (big_gcd(s.k, s.l) != 1) constraint_error(id, "gcd(k, l) = 1");
  s.z = s.k * s.iota + s.l;
  if (mod_floor(s.k * s.mu, s.z) != 1) constraint_error(id, "k*mu = 1 mod zeta");
  if (big_gcd(s.d, s.iota) != 1) constraint_error(id, "gcd(d, iota) = 1");
  s.c0 = s.iota * (1 - s.mu * s.k) / s.z;
  s.c1 = (s.iota + s.mu * s.l) / s.z;
  return s;
}

void check_gcd_interval(const BigInt& d, const BigInt& off, const BigInt& iota,
                        const std::string& id) {
  if (off < 1) constraint_error(id, "column offset must be >= 1");
  for (BigInt delta = d; delta <= d + off; ++delta)
    if (big_gcd(delta, iota) != 1)
      constraint_error(id, "gcd(delta, iota) = 1 for all delta in [d, d+offset]");
}

DefiningMatrix base59(const S59& s, const Json& params, const std::string& id) {
  DefiningMatrix p;
  p.blocks = {block1(s.k * s.iota, s.d, s.c0), block1(s.l, s.d, s.c1)};
  BigInt r = param(params, "r");
  if (r < 2) constraint_error(id, "r >= 2");
  IntVec ds = param_vec(params, "di");
  if (ds.size() + 1 != static_cast<size_t>(r.convert_to<long long>()))
    constraint_error(id, "need r-1 trailing offsets di");
  append_unit_pairs(p, ds, id);
  return p;
}

bool all_ones(const IntVec& v) {
  for (const auto& e : v)
    if (e != 1) return false;
  return true;
}

Built build_p62(const Json& params) {
  S59 s = series59_params(params, "P_62");
  Built b = fixed(base59(s, params, "P_62"), NFCase::VI, s.iota, s.z, s.mu);
  b.terminal = all_ones(param_vec(params, "di"));
  return b;
}

Built build_p63(const Json& params) {
  S59 s = series59_params(params, "P_63");
  BigInt d1 = param(params, "d1");
  check_gcd_interval(s.d, d1, s.iota, "P_63");
  DefiningMatrix p = base59(s, params, "P_63");
  p.blocks[1].l.push_back(s.l);
  p.blocks[1].d.push_back({s.d + d1, s.c1});
  Built b = fixed(std::move(p), NFCase::VI, s.iota, s.z, s.mu);
  b.terminal = all_ones(param_vec(params, "di")) && d1 == 1;
  return b;
}

Built build_p64(const Json& params) {
  S59 s = series59_params(params, "P_64");
  BigInt d0 = param(params, "d0");
  check_gcd_interval(s.d, d0, s.iota, "P_64");
  DefiningMatrix p = base59(s, params, "P_64");
  p.blocks[0].l.push_back(s.k * s.iota);
  p.blocks[0].d.push_back({s.d + d0, s.c0});
  Built b = fixed(std::move(p), NFCase::VI, s.iota, s.z, s.mu);
  b.terminal = all_ones(param_vec(params, "di")) && d0 == 1;
  return b;
}

Built build_p65(const Json& params) {
  S59 s = series59_params(params, "P_65");
  BigInt d0 = param(params, "d0"), d1 = param(params, "d1");
  check_gcd_interval(s.d, d0, s.iota, "P_65");
  check_gcd_interval(s.d, d1, s.iota, "P_65");
  DefiningMatrix p = base59(s, params, "P_65");
  p.blocks[0].l.push_back(s.k * s.iota);
  p.blocks[0].d.push_back({s.d + d0, s.c0});
  p.blocks[1].l.push_back(s.l);
  p.blocks[1].d.push_back({s.d + d1, s.c1});
  Built b = fixed(std::move(p), NFCase::VI, s.iota, s.z, s.mu);
  b.terminal = all_ones(param_vec(params, "di")) && d0 == 1 && d1 == 1;
  return b;
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"P_1", build_p1},   {"P_2", build_p2},   {"P_3", build_p3},   {"P_4", build_p4},
      {"P_5", build_p5},   {"P_6", build_p6},   {"P_7", build_p7},   {"P_8", build_p8},
      {"P_9", build_p9},   {"P_10", build_p10}, {"P_11", build_p11}, {"P_12", build_p12},
      {"P_13", build_p13}, {"P_14", build_p14}, {"P_15", build_p15}, {"P_16", build_p16},
      {"P_17", build_p17}, {"P_18", build_p18}, {"P_19", build_p19}, {"P_20", build_p20},
      {"P_21", build_p21}, {"P_22", build_p22}, {"P_23", build_p23}, {"P_24", build_p24},
      {"P_25", build_p25}, {"P_26", build_p26}, {"P_27", build_p27}, {"P_28", build_p28},
      {"P_29", build_p29}, {"P_30", build_p30}, {"P_31", build_p31}, {"P_32", build_p32},
      {"P_33", build_p33}, {"P_34", build_p34}, {"P_35", build_p35}, {"P_36", build_p36},
      {"P_37", build_p37}, {"P_38", build_p38}, {"P_39", build_p39}, {"P_40", build_p40},
      {"P_41", build_p41}, {"P_42", build_p42}, {"P_43", build_p43}, {"P_44", build_p44},
      {"P_45", build_p45}, {"P_46", build_p46}, {"P_47", build_p47}, {"P_48", build_p48},
      {"P_49", build_p49}, {"P_50", build_p50}, {"P_51", build_p51}, {"P_52", build_p52},
      {"P_53", build_p53}, {"P_54", build_p54}, {"P_55", build_p55}, {"P_56", build_p56},
      {"P_57", build_p57}, {"P_58", build_p58}, {"P_59", build_p59}, {"P_60", build_p60},
      {"P_61", build_p61}, {"P_62", build_p62}, {"P_63", build_p63}, {"P_64", build_p64},
      {"P_65", build_p65},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_entry_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog_data().at("entries")) ids.push_back(e.at("id"));
  return ids;
}

bool is_toric_entry(const std::string& id) { return id.rfind("toric_", 0) == 0; }

MatrixInstance instantiate_matrix(const std::string& id, const Json& params) {
  auto it = builders().find(id);
  if (it == builders().end())
    throw std::invalid_argument("catalog: unknown matrix entry '" + id + "'");
  Built b = it->second(params);
  auto check = validate(b.m);
  if (!check.ok()) {
    std::string msg = "catalog " + id + ": instantiated matrix invalid:";
    for (const auto& s : check.issues) msg += " " + s + ";";
    throw std::invalid_argument(msg);
  }
  MatrixInstance inst;
  inst.entry_id = id;
  inst.params = params;
  inst.matrix = std::move(b.m);
  inst.expected_case = b.case_id;
  inst.expected_iota = b.iota;
  inst.expected_zeta = b.zeta;
  inst.expected_mu = b.mu;
  inst.expected_terminal = b.terminal;
  return inst;
}

ToricInstance instantiate_toric(const std::string& id, const Json& params) {
  ToricInstance inst;
  inst.entry_id = id;
  inst.params = params;
  if (id == "toric_ii") {
    BigInt n = param(params, "n"), m = param(params, "m");
    inst.polytope = ii_polytope({IICase::Id::II, n, m, 2});
    inst.expected_iota = 2;
    BigInt dd = big_gcd(2 * m, m + n);
    inst.expected_cl = ClassGroup{1, {2 * dd}};
    inst.expected_terminal = false;
    return inst;
  }
  if (id == "toric_iii") {
    BigInt n = param(params, "n"), m = param(params, "m"), iota = param(params, "iota");
    inst.polytope = ii_polytope({IICase::Id::III, n, m, iota});
    inst.expected_iota = iota;
    inst.expected_cl = ClassGroup{0, {}};
    BigInt ord = iota * m;
    if (ord > 1) inst.expected_cl.torsion.push_back(ord);
    BigInt a1 = mod_inverse(n, iota);
    inst.expected_q_row = IntVec{mod_floor(BigInt(1), ord), mod_floor(m * a1, ord),
                                 mod_floor(BigInt(-1), ord)};
    inst.expected_terminal = m == 1;
    return inst;
  }
  if (id == "toric_iv") {
    BigInt m = param(params, "m");
    inst.polytope = ii_polytope({IICase::Id::IV, 1, m, 2});
    inst.expected_iota = 2;
    inst.expected_cl = ClassGroup{0, {4 * m}};
    inst.expected_q_row = IntVec{2, mod_floor(2 * m - 1, 4 * m), mod_floor(BigInt(-1), 4 * m)};
    inst.expected_terminal = false;
    return inst;
  }
  if (id == "toric_v") {
    inst.polytope = ii_polytope({IICase::Id::V, 1, 1, 2});
    inst.expected_iota = 2;
    inst.expected_cl = ClassGroup{0, {10}};
    inst.expected_q_row = IntVec{1, 1, 3};
    inst.expected_terminal = false;
    return inst;
  }
  if (id == "toric_vi") {
    inst.polytope = ii_polytope({IICase::Id::VI, 1, 1, 3});
    inst.expected_iota = 3;
    inst.expected_cl = ClassGroup{0, {9}};
    inst.expected_q_row = IntVec{1, 4, 7};
    inst.expected_terminal = false;
    return inst;
  }
  throw std::invalid_argument("catalog: unknown toric entry '" + id + "'");
}

std::variant<MatrixInstance, ToricInstance> instantiate(const std::string& id,
                                                        const Json& params) {
  if (is_toric_entry(id)) return instantiate_toric(id, params);
  return instantiate_matrix(id, params);
}

std::vector<NegativeControl> negative_controls() {
  std::vector<NegativeControl> out;
  auto make = [&](const std::string& id, DefiningMatrix m, IntVec w) {
    out.push_back({id, std::move(m), std::move(w)});
  };
  {
    // The published family P_{1,iota} with the last row scaled; iota must be
    // coprime to 3 for primitive columns, so the first non-canonical member
    // is iota = 4. It carries the published critical point (-1,-1,0,-1).
    DefiningMatrix p;
    p.blocks = {Block{{3, 1}, {{1, -8}, {0, 0}}}, block1(3, 0, 4), block1(2, -1, 4)};
    make("neg_p1_iota4", std::move(p), {-1, -1, 0, -1});
  }
  {
    DefiningMatrix p;
    p.blocks = {block1(3, 1, 0), block1(3, 0, 2), block1(2, 0, -1)};
    p.dprime = {{BigInt(0), BigInt(1)}};
    make("neg_zeta3_lineality_d1_0", std::move(p), {1, 0, 0, 1});
  }
  {
    DefiningMatrix p;
    p.blocks = {block1(3, 1, 0), block1(3, 0, 2), block1(2, 0, -1)};
    p.dprime = {{BigInt(3), BigInt(1)}};
    make("neg_zeta3_lineality_d1_3", std::move(p), {1, 0, 1, 1});
  }
  {
    DefiningMatrix p = base_432();
    p.dprime = {{BigInt(4), BigInt(1)}};
    make("neg_p6_d1_4", std::move(p), {-1, -1, 1, 1});
  }
  {
    DefiningMatrix p = base_432();
    p.dprime = {{BigInt(8), BigInt(1)}};
    make("neg_p6_d1_8", std::move(p), {-1, -1, 2, 1});
  }
  {
    DefiningMatrix p;
    p.blocks = {block1(4, 0, 3), block1(3, 0, -2), block1(2, 1, 0), unit_pair(1)};
    make("neg_zeta2_432_r3", std::move(p), {-1, -1, -1, 2, 1});
  }
  return out;
}

std::vector<ToricInstance> toric_grid() {
  std::vector<ToricInstance> out;
  for (long n = 1; n <= 5; ++n)
    for (long m = 1; m <= 5; ++m)
      out.push_back(instantiate_toric("toric_ii", Json{{"n", n}, {"m", m}}));
  for (long n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long iota = 2; iota <= 5; ++iota) {
        if (std::gcd(n, iota) != 1) continue;
        out.push_back(
            instantiate_toric("toric_iii", Json{{"n", n}, {"m", m}, {"iota", iota}}));
      }
  for (long m = 2; m <= 6; ++m)
    out.push_back(instantiate_toric("toric_iv", Json{{"m", m}}));
  out.push_back(instantiate_toric("toric_v", Json::object()));
  out.push_back(instantiate_toric("toric_vi", Json::object()));
  return out;
}

std::vector<MatrixInstance> catalog_matrix_instances() {
  std::vector<MatrixInstance> out;
  for (const auto& e : catalog_data().at("entries")) {
    std::string id = e.at("id");
    if (is_toric_entry(id)) continue;
    for (const auto& pt : e.at("grid")) out.push_back(instantiate_matrix(id, pt));
  }
  return out;
}

}  // namespace latgeo

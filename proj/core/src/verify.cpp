#include <latgeo/verify.hpp>

#include <latgeo/kempty.hpp>
#include <latgeo/lemmas.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <future>
#include <sstream>

namespace latgeo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string compact(const Json& j) { return j.empty() ? std::string() : j.dump(); }

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

// Brute-force canonicity of a lemma polygon through the polytope module.
bool polygon_canonical(const VPolytope& p) { return is_canonical_polytope(p).ok; }

}  // namespace

bool q_row_matches(const IntVec& computed, const IntVec& expected, const BigInt& modulus) {
  if (computed.size() != expected.size()) return false;
  IntVec perm = expected;
  std::sort(perm.begin(), perm.end());
  do {
    for (BigInt u = 1; u < modulus; ++u) {
      if (big_gcd(u, modulus) != 1) continue;
      bool ok = true;
      for (size_t i = 0; i < computed.size() && ok; ++i)
        ok = mod_floor(u * perm[i], modulus) == mod_floor(computed[i], modulus);
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

VerificationReport verify_kempty() {
  VerificationReport rep;
  rep.suite = "kempty";

  // Sporadic count table for k = 1..6.
  const long expected_counts[] = {0, 2, 7, 32, 96, 279};
  for (long k = 1; k <= 6; ++k) {
    auto t0 = Clock::now();
    auto sp = kempty::enumerate_sporadic_minimal(k);
    ReportEntry e;
    e.id = "sporadic_count_k" + std::to_string(k);
    e.pass = static_cast<long>(sp.size()) == expected_counts[k - 1];
    e.detail = "expected " + std::to_string(expected_counts[k - 1]) + ", computed " +
               std::to_string(sp.size());
    // Bound check on every enumerated apex.
    long long bound = kempty::sporadic_bound(k);
    for (const auto& s : sp)
      if (s.x > bound) {
        e.pass = false;
        e.detail += "; apex exceeds bound";
        break;
      }
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  }

  // Strip counts: sum of totients, k <= 50; spot value 4 at k = 3.
  {
    auto t0 = Clock::now();
    ReportEntry e;
    e.id = "strip_counts";
    e.pass = true;
    std::vector<long> phi(51, 0);
    for (long i = 1; i <= 50; ++i) {
      phi[i] = 0;
      for (long j = 1; j <= i; ++j)
        if (std::gcd(i, j) == 1) ++phi[i];
    }
    long acc = 0;
    for (long k = 1; k <= 50; ++k) {
      acc += phi[k];
      if (static_cast<long>(kempty::farey_strips(k).size()) != acc) {
        e.pass = false;
        e.detail = "strip count mismatch at k=" + std::to_string(k);
        break;
      }
    }
    if (e.pass && kempty::farey_strips(3).size() != 4) {
      e.pass = false;
      e.detail = "k=3 strip count is not 4";
    }
    if (e.pass) e.detail = "sum-of-totient strip counts hold for k <= 50";
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  }

  // Structure theorem at small k: below twice the bound, every minimal
  // k-empty standard triangle is strip-contained or listed sporadic.
  for (long k = 1; k <= 4; ++k) {
    auto t0 = Clock::now();
    ReportEntry e;
    e.id = "structure_theorem_k" + std::to_string(k);
    e.pass = true;
    auto sporadics = kempty::enumerate_sporadic_minimal(k);
    auto strips = kempty::farey_strips(k);
    long long lim = 2 * kempty::sporadic_bound(k);
    for (long long x = 1; x <= lim && e.pass; ++x)
      for (long long y = 0; y < x && e.pass; ++y) {
        kempty::LatticeTriangle t{{0, 0}, {0, 1}, {x, y}};
        if (!kempty::minimal_standard_conditions(x, y, k)) continue;
        if (!kempty::is_k_empty(t, k)) continue;
        bool stripped = false;
        for (const auto& st : strips) stripped = stripped || kempty::strip_contains(t, st);
        if (stripped) continue;
        bool listed = false;
        for (const auto& s : sporadics) listed = listed || (s.x == x && s.y == y);
        if (!listed) {
          e.pass = false;
          e.detail = "unlisted sporadic apex (" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
      }
    if (e.pass) e.detail = "complete up to x <= " + std::to_string(lim);
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

VerificationReport verify_lemmas() {
  VerificationReport rep;
  rep.suite = "lemmas";

  auto run = [&](const std::string& id, auto&& body) {
    auto t0 = Clock::now();
    ReportEntry e;
    e.id = id;
    e.pass = true;
    body(e);
    if (e.pass && e.detail.empty()) e.detail = "zero mismatches";
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  };

  run("ncone_vs_bruteforce", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota)
        for (long q = 2; q <= 6 && e.pass; ++q) {
          bool closed = ncone_canonical(k, iota, q);
          bool brute = polygon_canonical(ncone_polygon(k, iota, q));
          if (closed != brute) {
            e.pass = false;
            e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota) +
                       " q=" + std::to_string(q);
          }
        }
  });

  run("halfcone_vs_ncone_q2", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        bool cor = corollary_predicate(CorollaryVariant::Halfcone, k, iota);
        if (cor != ncone_canonical(k, iota, 2) ||
            cor != polygon_canonical(ncone_polygon(k, iota, 2))) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("c13_vs_ncone_q3", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        bool cor = corollary_predicate(CorollaryVariant::C13, k, iota);
        if (cor != ncone_canonical(k, iota, 3) ||
            cor != polygon_canonical(ncone_polygon(k, iota, 3))) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("halfhalfcone_vs_bruteforce", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        bool cor = corollary_predicate(CorollaryVariant::Halfhalfcone, k, iota);
        bool brute = polygon_canonical(two_sided_polygon(k, iota, 2));
        if (cor != brute) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("c1313_vs_bruteforce", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        bool cor = corollary_predicate(CorollaryVariant::C1313, k, iota);
        bool brute = polygon_canonical(two_sided_polygon(k, iota, 3));
        if (cor != brute) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("lemma_2_5_vs_c13", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        if (lemma_2_5(k, iota) != corollary_predicate(CorollaryVariant::C13, k, iota)) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("cone_1245_vs_bruteforce", [&](ReportEntry& e) {
    for (long k = -10; k <= 10 && e.pass; ++k)
      for (long iota = 2; iota <= 8 && e.pass; ++iota) {
        auto poly = cone_1245_polygon(k, iota);
        bool brute = true;  // no nonzero lattice point
        for (const auto& pt : poly.lattice_points()) {
          bool zero = pt[0] == 0 && pt[1] == 0;
          if (!zero) brute = false;
        }
        if (cone_1245_lattice_free(k, iota) != brute) {
          e.pass = false;
          e.detail = "mismatch at k=" + std::to_string(k) + " iota=" + std::to_string(iota);
        }
      }
  });

  run("halfheight_vs_bruteforce", [&](ReportEntry& e) {
    for (long i = -6; i <= 6 && e.pass; ++i)
      for (long j = -6; j <= 6 && e.pass; ++j) {
        if (i == j) continue;
        for (long k = 0; k <= 6 && e.pass; ++k) {
          auto poly = halfheight_polygon(i, j, k);
          bool brute = true;
          for (const auto& pt : poly.lattice_points()) {
            bool zero = pt[0] == 0 && pt[1] == 0;
            if (!zero) brute = false;
          }
          if (halfheight_lattice_free(i, j, k) != brute) {
            e.pass = false;
            e.detail = "mismatch at i=" + std::to_string(i) + " j=" + std::to_string(j) +
                       " k=" + std::to_string(k);
          }
        }
      }
  });

  run("quadrangle_noncanonical", [&](ReportEntry& e) {
    for (long iota = 2; iota <= 5 && e.pass; ++iota)
      for (long a = -3; a <= 3 && e.pass; ++a)
        for (long b = -3; b <= 3 && e.pass; ++b) {
          auto v = is_canonical_polytope(quadrangle_polytope(a, b, iota));
          if (v.ok || !v.witness) {
            e.pass = false;
            e.detail = "quadrangle canonical at iota=" + std::to_string(iota);
          }
        }
  });

  return rep;
}

VerificationReport verify_toric() {
  VerificationReport rep;
  rep.suite = "toric";
  for (const auto& inst : toric_grid()) {
    auto t0 = Clock::now();
    ReportEntry e;
    e.id = inst.entry_id;
    e.instance = compact(inst.params);
    e.pass = true;
    std::ostringstream detail;

    auto canon = is_canonical_polytope(inst.polytope);
    if (!canon.ok) {
      e.pass = false;
      detail << "not canonical (witness " << (canon.witness ? vec_str(*canon.witness) : "?")
             << "); ";
    }
    auto term = is_terminal_polytope(inst.polytope);
    if (term.ok != inst.expected_terminal) {
      e.pass = false;
      detail << "terminal=" << (term.ok ? "true" : "false") << " expected "
             << (inst.expected_terminal ? "true" : "false") << "; ";
    }
    auto gor = q_gorenstein(inst.polytope);
    if (!gor || gor->index != inst.expected_iota) {
      e.pass = false;
      detail << "Gorenstein index mismatch; ";
    }

    // Class group from the vertex matrix.
    IntMat p(3, inst.polytope.vertices().size() - 1);
    {
      size_t c = 0;
      for (const auto& v : inst.polytope.vertices()) {
        bool zero = true;
        for (const auto& x : v) zero = zero && x == 0;
        if (zero) continue;
        for (size_t rrow = 0; rrow < 3; ++rrow) p.at(rrow, c) = rat_num(v[rrow]);
        ++c;
      }
    }
    auto [cl, q] = class_group(p);
    if (cl.free_rank != inst.expected_cl.free_rank || cl.torsion != inst.expected_cl.torsion) {
      e.pass = false;
      detail << "Cl mismatch: computed free_rank=" << cl.free_rank << " torsion=";
      detail << vec_str(cl.torsion) << " expected free_rank=" << inst.expected_cl.free_rank
             << " torsion=" << vec_str(inst.expected_cl.torsion) << "; ";
    } else if (inst.expected_q_row) {
      if (q.torsion_rows.size() != 1 ||
          !q_row_matches(q.torsion_rows[0], *inst.expected_q_row, q.torsion_moduli[0])) {
        e.pass = false;
        detail << "Q mismatch: computed "
               << (q.torsion_rows.empty() ? "(none)" : vec_str(q.torsion_rows[0]))
               << " expected " << vec_str(*inst.expected_q_row) << "; ";
      }
    }
    if (e.pass) detail << "canonical, terminal=" << (term.ok ? "true" : "false") << ", Cl ok";
    e.detail = detail.str();
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

ReportEntry verify_matrix_instance(const MatrixInstance& inst) {
  auto t0 = Clock::now();
  ReportEntry e;
  e.id = inst.entry_id;
  e.instance = compact(inst.params);
  e.pass = true;
  std::ostringstream detail;
  try {
    auto check = validate(inst.matrix);
    if (!check.ok()) {
      e.pass = false;
      detail << "validate failed; ";
    }
    auto info = normal_form_info(inst.matrix);
    if (info.case_id != inst.expected_case || info.iota != inst.expected_iota ||
        info.zeta != inst.expected_zeta ||
        (inst.expected_mu && info.case_id == NFCase::VI && info.mu != *inst.expected_mu)) {
      e.pass = false;
      detail << "normal form mismatch: computed (" << to_string(info.case_id) << ", iota "
             << info.iota.str() << ", zeta " << info.zeta.str() << ", mu " << info.mu.str()
             << "); ";
    }
    auto v = verdict(inst.matrix);
    if (v.canonical != inst.expected_canonical) {
      e.pass = false;
      detail << "canonical=" << (v.canonical ? "true" : "false");
      if (!v.witnesses.empty()) {
        auto g = leaf_point_global(v.witnesses.front().point, inst.matrix.r());
        detail << " witness (";
        for (size_t i = 0; i < g.size(); ++i)
          detail << (i ? "," : "") << to_string(g[i]);
        detail << ")";
      }
      detail << "; ";
    }
    if (v.terminal != inst.expected_terminal) {
      e.pass = false;
      detail << "terminal=" << (v.terminal ? "true" : "false") << " expected "
             << (inst.expected_terminal ? "true" : "false") << "; ";
    }
    auto [cl, q] = class_group(inst.matrix);
    // Diagnostic cross-check: order of the anticanonical class vs iota.
    BigInt ord = k_element_order(q, anticanonical_class(inst.matrix));
    if (e.pass) {
      detail << "canonical, terminal=" << (v.terminal ? "true" : "false") << ", Cl rank "
             << cl.free_rank << " torsion " << vec_str(cl.torsion) << ", ord(K) "
             << ord.str() << (ord == inst.expected_iota ? " = iota" : " (iota cross-check differs)");
    }
  } catch (const std::exception& ex) {
    e.pass = false;
    detail << "exception: " << ex.what();
  }
  e.detail = detail.str();
  e.millis = ms_since(t0);
  return e;
}

}  // namespace

VerificationReport verify_catalog() {
  VerificationReport rep;
  rep.suite = "catalog";

  auto instances = catalog_matrix_instances();
  std::vector<std::future<ReportEntry>> futs;
  futs.reserve(instances.size());
  for (const auto& inst : instances)
    futs.push_back(std::async(std::launch::async, verify_matrix_instance, inst));
  for (auto& f : futs) rep.entries.push_back(f.get());

  for (const auto& nc : negative_controls()) {
    auto t0 = Clock::now();
    ReportEntry e;
    e.id = nc.id;
    e.pass = true;
    std::ostringstream detail;
    try {
      auto v = verdict(nc.matrix);
      if (v.canonical) {
        e.pass = false;
        detail << "unexpectedly canonical; ";
      }
      bool witnessed = false;
      for (const auto& w : v.witnesses) {
        auto g = leaf_point_global(w.point, nc.matrix.r());
        if (g.size() != nc.expected_witness.size()) continue;
        bool same = true;
        for (size_t i = 0; i < g.size(); ++i)
          same = same && g[i] == Rat(nc.expected_witness[i]);
        witnessed = witnessed || same;
      }
      if (!witnessed) {
        e.pass = false;
        detail << "published witness " << vec_str(nc.expected_witness) << " not found; ";
      }
      if (e.pass)
        detail << "non-canonical, witness " << vec_str(nc.expected_witness) << " reproduced";
    } catch (const std::exception& ex) {
      e.pass = false;
      detail << "exception: " << ex.what();
    }
    e.detail = detail.str();
    e.millis = ms_since(t0);
    rep.entries.push_back(std::move(e));
  }

  // Deterministic order by (id, instance).
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     return a.id != b.id ? a.id < b.id : a.instance < b.instance;
                   });
  return rep;
}

std::vector<VerificationReport> verify_paper(const std::string& suite) {
  std::vector<VerificationReport> out;
  bool all = suite.empty() || suite == "all";
  if (all || suite == "kempty") out.push_back(verify_kempty());
  if (all || suite == "lemmas") out.push_back(verify_lemmas());
  if (all || suite == "toric") out.push_back(verify_toric());
  if (all || suite == "catalog") out.push_back(verify_catalog());
  if (out.empty()) throw std::invalid_argument("verify_paper: unknown suite '" + suite + "'");
  return out;
}

}  // namespace latgeo

// Test-only brute-force oracles, independent of the library code paths they
// check, plus deterministic random generators.
#pragma once

#include <latgeo/bigint.hpp>
#include <latgeo/intmat.hpp>
#include <latgeo/kempty.hpp>
#include <latgeo/lp.hpp>
#include <latgeo/polytope.hpp>
#include <latgeo/ratlin.hpp>

#include <optional>
#include <random>
#include <vector>

namespace latgeo::testing {

// ---- exact LP oracle ---------------------------------------------------------

// Feasibility by vertex enumeration: every candidate basic point (intersection
// of n constraint hyperplanes, including box faces |x_i| <= M) is tested
// against all constraints. Sound for systems whose feasible region, if
// nonempty, meets the box.
inline bool lp_bruteforce(const std::vector<LinearConstraint>& cs, size_t n,
                          long box = 1000000) {
  std::vector<LinearConstraint> all = cs;
  for (size_t i = 0; i < n; ++i) {
    RatVec row(n, Rat(0));
    row[i] = 1;
    all.push_back(make_ge(row, Rat(-box)));
    RatVec row2(n, Rat(0));
    row2[i] = -1;
    all.push_back(make_ge(row2, Rat(-box)));
  }
  size_t m = all.size();
  std::vector<size_t> idx(n, 0);
  auto satisfied = [&](const RatVec& x) {
    for (const auto& c : cs) {
      Rat lhs(0);
      for (size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
      if (c.kind == LinearConstraint::Kind::Eq ? lhs != c.rhs : lhs < c.rhs) return false;
    }
    return true;
  };
  // All n-subsets of constraints taken tight.
  std::vector<size_t> comb(n);
  for (size_t i = 0; i < n; ++i) comb[i] = i;
  if (m < n) {
    // Fewer constraints than variables: try the all-tight solve directly.
    RatMat a;
    RatVec b;
    for (const auto& c : all) {
      a.push_back(c.coeffs);
      b.push_back(c.rhs);
    }
    auto x = rat_solve(a, b);
    return x && satisfied(*x);
  }
  for (;;) {
    RatMat a;
    RatVec b;
    for (size_t i : comb) {
      a.push_back(all[i].coeffs);
      b.push_back(all[i].rhs);
    }
    auto x = rat_solve(a, b);
    if (x && satisfied(*x)) return true;
    // next combination
    size_t i = n;
    bool done = true;
    while (i-- > 0) {
      if (comb[i] + (n - i) < m) {
        ++comb[i];
        for (size_t j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) return false;
  }
}

// ---- polytope oracles ----------------------------------------------------------

// Lattice points of a polytope by bounding-box scan with LP membership (the
// convex-combination route), independent of the facet cache.
inline std::vector<IntVec> lattice_points_lp(const VPolytope& p) {
  std::vector<IntVec> out;
  size_t d = p.dim();
  IntVec lo(d), hi(d);
  for (size_t j = 0; j < d; ++j) {
    Rat mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn);
    hi[j] = rat_floor(mx);
    if (lo[j] > hi[j]) return {};
  }
  IntVec cur = lo;
  for (;;) {
    RatVec q(d);
    for (size_t j = 0; j < d; ++j) q[j] = Rat(cur[j]);
    if (p.contains_lp(q) != Membership::Outside) out.push_back(cur);
    size_t j = d;
    bool done = true;
    while (j-- > 0) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (size_t t = j + 1; t < d; ++t) cur[t] = lo[t];
        done = false;
        break;
      }
    }
    if (done) return out;
  }
}

// Barycentric membership classification for a 2-d triangle given as three
// rational points: signs of the three sub-determinants.
inline Membership barycentric_triangle(const RatVec& a, const RatVec& b, const RatVec& c,
                                       const RatVec& p) {
  auto orient = [](const RatVec& o, const RatVec& u, const RatVec& v) {
    return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0]);
  };
  Rat d0 = orient(a, b, p), d1 = orient(b, c, p), d2 = orient(c, a, p);
  bool neg = d0 < 0 || d1 < 0 || d2 < 0;
  bool pos = d0 > 0 || d1 > 0 || d2 > 0;
  if (neg && pos) return Membership::Outside;
  if (d0 == 0 || d1 == 0 || d2 == 0) return Membership::Boundary;
  return Membership::Interior;
}

// Complete decision procedure for k-affine equivalence of triangles: try all
// vertex assignments, solve for the matrix exactly, check unimodularity and
// the k-divisibility of the translation.
inline bool affk_equivalent_bruteforce(const kempty::LatticeTriangle& a,
                                       const kempty::LatticeTriangle& b, long long k) {
  using kempty::Pt;
  std::array<Pt, 3> av{a.v0, a.v1, a.v2}, bv{b.v0, b.v1, b.v2};
  std::array<int, 3> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    Pt b0 = bv[perm[0]];
    long long e1x = bv[perm[1]].x - b0.x, e1y = bv[perm[1]].y - b0.y;
    long long e2x = bv[perm[2]].x - b0.x, e2y = bv[perm[2]].y - b0.y;
    long long det = e1x * e2y - e1y * e2x;
    if (det == 0) continue;
    long long f1x = av[1].x - av[0].x, f1y = av[1].y - av[0].y;
    long long f2x = av[2].x - av[0].x, f2y = av[2].y - av[0].y;
    // A = [f1 f2] [e1 e2]^{-1}; must be integral unimodular.
    long long n00 = f1x * e2y - f2x * e1y, n01 = -f1x * e2x + f2x * e1x;
    long long n10 = f1y * e2y - f2y * e1y, n11 = -f1y * e2x + f2y * e1x;
    if (n00 % det || n01 % det || n10 % det || n11 % det) continue;
    long long a00 = n00 / det, a01 = n01 / det, a10 = n10 / det, a11 = n11 / det;
    long long adet = a00 * a11 - a01 * a10;
    if (adet != 1 && adet != -1) continue;
    long long wx = av[0].x - (a00 * b0.x + a01 * b0.y);
    long long wy = av[0].y - (a10 * b0.x + a11 * b0.y);
    if (wx % k == 0 && wy % k == 0) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---- deterministic random data --------------------------------------------------

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }
};

// Random unimodular 2x2 as a short product of elementary matrices.
inline std::array<std::array<long long, 2>, 2> random_gl2(Rng& rng) {
  std::array<std::array<long long, 2>, 2> m{{{1, 0}, {0, 1}}};
  int steps = static_cast<int>(rng.uniform(1, 6));
  for (int s = 0; s < steps; ++s) {
    long long c = rng.uniform(-3, 3);
    switch (rng.uniform(0, 3)) {
      case 0:  // row0 += c*row1
        m[0][0] += c * m[1][0];
        m[0][1] += c * m[1][1];
        break;
      case 1:  // row1 += c*row0
        m[1][0] += c * m[0][0];
        m[1][1] += c * m[0][1];
        break;
      case 2:
        std::swap(m[0], m[1]);
        break;
      default:
        m[0][0] = -m[0][0];
        m[0][1] = -m[0][1];
        break;
    }
  }
  return m;
}

inline kempty::AffK random_affk(Rng& rng, long long k) {
  kempty::AffK t;
  t.k = k;
  t.a = random_gl2(rng);
  t.w = {k * rng.uniform(-4, 4), k * rng.uniform(-4, 4)};
  return t;
}

inline IntMat random_intmat(Rng& rng, size_t rows, size_t cols, long long lo, long long hi) {
  IntMat m(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rng.uniform(lo, hi);
  return m;
}

}  // namespace latgeo::testing

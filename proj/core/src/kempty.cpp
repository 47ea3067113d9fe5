#include <latgeo/kempty.hpp>

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace latgeo::kempty {

I64 gcd64(I64 a, I64 b) { return std::gcd(a, b); }

Pt apply(const AffK& t, const Pt& p) {
  return {t.a[0][0] * p.x + t.a[0][1] * p.y + t.w.x,
          t.a[1][0] * p.x + t.a[1][1] * p.y + t.w.y};
}

LatticeTriangle apply(const AffK& t, const LatticeTriangle& s) {
  return {apply(t, s.v0), apply(t, s.v1), apply(t, s.v2)};
}

AffK compose(const AffK& outer, const AffK& inner) {
  AffK c;
  c.k = outer.k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.a[i][j] = outer.a[i][0] * inner.a[0][j] + outer.a[i][1] * inner.a[1][j];
  Pt wi = apply(outer, inner.w);
  c.w = wi;
  return c;
}

bool valid(const AffK& t) {
  I64 det = t.a[0][0] * t.a[1][1] - t.a[0][1] * t.a[1][0];
  if (det != 1 && det != -1) return false;
  if (t.k <= 0) return false;
  return t.w.x % t.k == 0 && t.w.y % t.k == 0;
}

namespace {

I64 cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool collinear(const LatticeTriangle& s) { return cross(s.v0, s.v1, s.v2) == 0; }

bool triangle_contains(const LatticeTriangle& s, const Pt& p) {
  I64 d0 = cross(s.v0, s.v1, p);
  I64 d1 = cross(s.v1, s.v2, p);
  I64 d2 = cross(s.v2, s.v0, p);
  bool has_neg = d0 < 0 || d1 < 0 || d2 < 0;
  bool has_pos = d0 > 0 || d1 > 0 || d2 > 0;
  return !(has_neg && has_pos);
}

std::vector<Pt> k_fold_points_in(const LatticeTriangle& s, I64 k) {
  if (k <= 0) throw std::invalid_argument("k_fold_points_in: k must be positive");
  I64 xmin = std::min({s.v0.x, s.v1.x, s.v2.x});
  I64 xmax = std::max({s.v0.x, s.v1.x, s.v2.x});
  I64 ymin = std::min({s.v0.y, s.v1.y, s.v2.y});
  I64 ymax = std::max({s.v0.y, s.v1.y, s.v2.y});
  auto ceil_div = [](I64 a, I64 b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
  auto floor_divll = [](I64 a, I64 b) { return a >= 0 ? a / b : -(((-a) + b - 1) / b); };
  std::vector<Pt> out;
  for (I64 ux = ceil_div(xmin, k); ux <= floor_divll(xmax, k); ++ux)
    for (I64 uy = ceil_div(ymin, k); uy <= floor_divll(ymax, k); ++uy) {
      Pt p{ux * k, uy * k};
      if (triangle_contains(s, p)) out.push_back(p);
    }
  return out;
}

bool is_k_empty(const LatticeTriangle& s, I64 k) {
  for (const Pt& p : k_fold_points_in(s, k))
    if (!(p == s.v0 || p == s.v1 || p == s.v2)) return false;
  return true;
}

I64 count_lattice_points(const LatticeTriangle& s) {
  // Pick: A = I + B/2 - 1, so #total = I + B = A + B/2 + 1.
  I64 a2 = std::abs(cross(s.v0, s.v1, s.v2));  // twice the area
  I64 b = gcd64(std::abs(s.v1.x - s.v0.x), std::abs(s.v1.y - s.v0.y)) +
          gcd64(std::abs(s.v2.x - s.v1.x), std::abs(s.v2.y - s.v1.y)) +
          gcd64(std::abs(s.v0.x - s.v2.x), std::abs(s.v0.y - s.v2.y));
  return (a2 + b) / 2 + 1;
}

I64 a_value(const std::vector<Pt>& polygon, I64 k) {
  if (polygon.size() < 3) throw std::invalid_argument("a_value: need a polygon");
  if (k <= 0) throw std::invalid_argument("a_value: k must be positive");
  bool found = false;
  I64 best = 0;
  size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& u = polygon[i];
    const Pt& v = polygon[(i + 1) % n];
    if ((u.x % k || u.y % k) && (v.x % k || v.y % k)) continue;
    I64 interior = gcd64(std::abs(v.x - u.x), std::abs(v.y - u.y)) - 1;
    if (!found || interior + 1 < best) {
      found = true;
      best = interior + 1;
    }
  }
  if (!found) throw std::invalid_argument("a_value: no vertex in k.Z^2");
  return best;
}

namespace {

// Extended gcd: returns (g, s, t) with s*a + t*b = g.
std::array<I64, 3> ext_gcd(I64 a, I64 b) {
  if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
  I64 old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    I64 q = old_r / r;
    I64 tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * ss; old_s = ss; ss = tmp;
    tmp = old_t - q * tt; old_t = tt; tt = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

I64 floor_divll(I64 a, I64 b) { return a >= 0 ? a / b : -(((-a) + b - 1) / b); }

// Linear map sending the primitive vector u/gcd(u) to (0,1); thus u itself
// goes to (0, gcd(u)).
std::array<std::array<I64, 2>, 2> to_vertical(Pt u) {
  I64 g = gcd64(std::abs(u.x), std::abs(u.y));
  I64 px = u.x / g, py = u.y / g;
  auto [gg, s, t] = ext_gcd(px, py);
  (void)gg;
  return {{{-py, px}, {s, t}}};
}

struct Route {
  StandardTriangle st;
  AffK transform;
};

// One normalization route: translate z to 0, send p to (0, gcd(p - z)) on
// the vertical axis, then move q into Delta keeping the axis fixed.
Route normalize_route(const LatticeTriangle& s, I64 k, Pt z, Pt p, Pt q) {
  Pt u{p.x - z.x, p.y - z.y};
  Pt v{q.x - z.x, q.y - z.y};
  I64 a = gcd64(std::abs(u.x), std::abs(u.y));
  auto m = to_vertical(u);
  Pt q2{m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
  if (q2.x == 0) throw std::logic_error("standard_form: degenerate triangle");
  I64 e = q2.x > 0 ? 1 : -1;
  I64 x = e * q2.x;
  I64 c = -floor_divll(q2.y, x);
  I64 y = q2.y + c * x;
  // S = [[e,0],[c*e? ...]] applied after m: row0 scaled by e, row1 += c*row0'.
  std::array<std::array<I64, 2>, 2> full;
  full[0][0] = e * m[0][0];
  full[0][1] = e * m[0][1];
  full[1][0] = c * full[0][0] + m[1][0];
  full[1][1] = c * full[0][1] + m[1][1];
  AffK t;
  t.k = k;
  t.a = full;
  t.w = {-(full[0][0] * z.x + full[0][1] * z.y), -(full[1][0] * z.x + full[1][1] * z.y)};
  return {StandardTriangle{a, x, y, k}, t};
}

}  // namespace

std::pair<StandardTriangle, AffK> standard_form(const LatticeTriangle& s, I64 k) {
  if (k <= 0) throw std::invalid_argument("standard_form: k must be positive");
  if (collinear(s)) throw std::invalid_argument("standard_form: collinear vertices");
  if (!is_k_empty(s, k)) throw std::invalid_argument("standard_form: triangle is not k-empty");

  std::vector<Pt> verts{s.v0, s.v1, s.v2};
  std::vector<Pt> kfold, rest;
  for (const Pt& v : verts)
    (v.x % k == 0 && v.y % k == 0 ? kfold : rest).push_back(v);
  if (kfold.empty())
    throw std::invalid_argument("standard_form: no vertex in k.Z^2");

  auto edge_interior = [](const Pt& a, const Pt& b) {
    return gcd64(std::abs(b.x - a.x), std::abs(b.y - a.y)) - 1;
  };

  Route best;
  bool have = false;
  auto consider = [&](const Route& r) {
    if (!have || r.st.y < best.st.y) {
      best = r;
      have = true;
    }
  };

  if (kfold.size() == 3) {
    // All vertices k-fold: the image is conv((0,0),(0,k),(k,0)).
    Pt z = kfold[0];
    Pt u{(kfold[1].x - z.x) / k, (kfold[1].y - z.y) / k};
    Pt v{(kfold[2].x - z.x) / k, (kfold[2].y - z.y) / k};
    I64 det = u.x * v.y - u.y * v.x;
    if (det != 1 && det != -1)
      throw std::logic_error("standard_form: k-fold triangle is not unimodular at scale k");
    // M maps u -> (0,1), v -> (1,0):
    // [u v]^{-1} = 1/det [[v.y, -v.x], [-u.y, u.x]]; M = [[0,1],[1,0]] [u v]^{-1}.
    I64 inv00 = v.y, inv01 = -v.x, inv10 = -u.y, inv11 = u.x;
    if (det == -1) { inv00 = -inv00; inv01 = -inv01; inv10 = -inv10; inv11 = -inv11; }
    std::array<std::array<I64, 2>, 2> m{{{inv10, inv11}, {inv00, inv01}}};
    AffK t;
    t.k = k;
    t.a = m;
    t.w = {-(m[0][0] * z.x + m[0][1] * z.y), -(m[1][0] * z.x + m[1][1] * z.y)};
    consider({StandardTriangle{k, k, 0, k}, t});
  } else if (kfold.size() == 2) {
    const Pt& v = rest[0];
    I64 d1 = edge_interior(kfold[0], v);
    I64 d2 = edge_interior(kfold[1], v);
    if (d1 < d2) {
      consider(normalize_route(s, k, kfold[0], v, kfold[1]));
    } else if (d2 < d1) {
      consider(normalize_route(s, k, kfold[1], v, kfold[0]));
    } else {
      consider(normalize_route(s, k, kfold[0], v, kfold[1]));
      consider(normalize_route(s, k, kfold[1], v, kfold[0]));
    }
  } else {
    const Pt& z = kfold[0];
    I64 d1 = edge_interior(z, rest[0]);
    I64 d2 = edge_interior(z, rest[1]);
    if (d1 < d2) {
      consider(normalize_route(s, k, z, rest[0], rest[1]));
    } else if (d2 < d1) {
      consider(normalize_route(s, k, z, rest[1], rest[0]));
    } else {
      consider(normalize_route(s, k, z, rest[0], rest[1]));
      consider(normalize_route(s, k, z, rest[1], rest[0]));
    }
  }

  // Postconditions: transform is k-affine and maps s onto the result.
  if (!valid(best.transform)) throw std::logic_error("standard_form: transform not k-affine");
  LatticeTriangle img = apply(best.transform, s);
  LatticeTriangle tgt = best.st.triangle();
  auto same_set = [](const LatticeTriangle& a, const LatticeTriangle& b) {
    std::vector<Pt> av{a.v0, a.v1, a.v2}, bv{b.v0, b.v1, b.v2};
    for (const Pt& p : av) {
      bool hit = false;
      for (const Pt& q : bv) hit = hit || p == q;
      if (!hit) return false;
    }
    return true;
  };
  if (!same_set(img, tgt)) throw std::logic_error("standard_form: transform image mismatch");
  return {best.st, best.transform};
}

std::vector<FareyNumber> farey_sequence(I64 k) {
  if (k < 1) throw std::invalid_argument("farey_sequence: k >= 1 required");
  std::vector<FareyNumber> out;
  for (I64 f2 = 1; f2 <= k; ++f2)
    for (I64 f1 = 0; f1 < f2; ++f1)
      if (gcd64(f1, f2) == 1) out.push_back({f1, f2});
  std::sort(out.begin(), out.end(), [](const FareyNumber& a, const FareyNumber& b) {
    return a.f1 * b.f2 < b.f1 * a.f2;
  });
  return out;
}

std::vector<FareyStrip> farey_strips(I64 k) {
  std::vector<FareyStrip> out;
  for (const auto& f : farey_sequence(k)) out.push_back({f, k, f.f2 == k});
  return out;
}

bool strip_contains(const LatticeTriangle& s, const FareyStrip& strip) {
  // Containment of S minus its vertex set: every vertex value must lie in
  // [0, k], a zero value may occur at one vertex only (two zero vertices
  // put a whole edge on the lower boundary), and when the upper bound is
  // strict (f2 = k) a value of k may likewise occur at one vertex only.
  const I64 k = strip.k, f1 = strip.f.f1, f2 = strip.f.f2;
  const Pt verts[3] = {s.v0, s.v1, s.v2};
  int zero_count = 0, top_count = 0;
  for (const Pt& v : verts) {
    I64 val = f2 * v.y - f1 * v.x;
    if (val < 0 || val > k) return false;
    if (val == 0 && ++zero_count > 1) return false;
    if (strip.upper_strict && val == k && ++top_count > 1) return false;
  }
  return true;
}

Spike spike_vertices(I64 k, const FareyNumber& f, I64 i) {
  if (f.f2 == k) throw std::invalid_argument("spike_vertices: f2 == k has no spike");
  if (i <= k - f.f2) throw std::invalid_argument("spike_vertices: need i > k - f2");
  Rat f1(f.f1), f2(f.f2), kk(k), ii(i);
  Rat slope = f1 / f2;
  Rat lift = kk / f2;
  Spike sp;
  sp.f = f;
  sp.i = i;
  sp.vertices[0] = {ii * kk, slope * ii * kk + lift};
  sp.vertices[1] = {(ii + f2) * kk, slope * (ii + f2) * kk + lift};
  Rat den = ii - kk + f2;
  sp.vertices[2] = {(ii + f2) * ii * kk / den, (slope * (ii + f2) * ii * kk + ii * lift) / den};
  sp.area = (ii * kk * kk / den - kk * kk) / 2;
  return sp;
}

I64 sporadic_bound(I64 k) { return (k * k - 1) * k - 1; }

bool minimal_standard_conditions(I64 x, I64 y, I64 k) {
  // a_S = 1 for conv((0,0),(0,1),(x,y)); conditions (ii)/(iii) only bind
  // when gcd(x,y) = 1.
  if (gcd64(std::abs(x), std::abs(y)) != 1) return true;
  bool kfold = x % k == 0 && y % k == 0;
  for (I64 z = 1; z <= y - 1; ++z) {
    I64 lhs = kfold ? (z + y) - z * y : 1 - z * y;
    if (lhs % x == 0) return false;
  }
  return true;
}

std::vector<StandardTriangle> enumerate_sporadic_minimal(I64 k) {
  if (k < 1) throw std::invalid_argument("enumerate_sporadic_minimal: k >= 1 required");
  I64 bound = sporadic_bound(k);
  auto strips = farey_strips(k);

  auto scan = [&](I64 x_lo, I64 x_hi) {
    std::vector<StandardTriangle> found;
    for (I64 x = x_lo; x <= x_hi; ++x)
      for (I64 y = 0; y < x; ++y) {
        LatticeTriangle t{{0, 0}, {0, 1}, {x, y}};
        if (!minimal_standard_conditions(x, y, k)) continue;
        bool stripped = false;
        for (const auto& st : strips)
          if (strip_contains(t, st)) {
            stripped = true;
            break;
          }
        if (stripped) continue;
        if (!is_k_empty(t, k)) continue;
        found.push_back({1, x, y, k});
      }
    return found;
  };

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (bound < 1) return {};
  workers = std::min<unsigned>(workers, static_cast<unsigned>(bound));
  std::vector<std::future<std::vector<StandardTriangle>>> futs;
  I64 chunk = (bound + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    I64 lo = 1 + w * chunk;
    I64 hi = std::min(bound, lo + chunk - 1);
    if (lo > hi) break;
    futs.push_back(std::async(std::launch::async, scan, lo, hi));
  }
  std::vector<StandardTriangle> out;
  for (auto& f : futs) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), [](const StandardTriangle& a, const StandardTriangle& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

bool k_equivalent(const LatticeTriangle& s1, const LatticeTriangle& s2, I64 k) {
  return standard_form(s1, k).first == standard_form(s2, k).first;
}

}  // namespace latgeo::kempty

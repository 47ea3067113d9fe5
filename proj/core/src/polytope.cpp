#include <latgeo/polytope.hpp>

#include <latgeo/lp.hpp>
#include <latgeo/ratlin.hpp>

#include <algorithm>
#include <stdexcept>

namespace latgeo {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Is p a convex combination of the given points? Optionally require every
// coefficient positive (homogenized: lambda_i >= 1, sum matching a free
// positive total, which encodes strictness exactly).
bool in_convex_hull(const std::vector<RatVec>& pts, const RatVec& p, bool strictly_positive) {
  size_t n = pts.size(), d = p.size();
  if (n == 0) return false;
  std::vector<LinearConstraint> cs;
  if (!strictly_positive) {
    // variables: lambda_1..lambda_n >= 0, sum = 1, sum lambda_i pts_i = p
    for (size_t i = 0; i < n; ++i) {
      RatVec row(n, Rat(0));
      row[i] = 1;
      cs.push_back(make_ge(row, Rat(0)));
    }
    cs.push_back(make_eq(RatVec(n, Rat(1)), Rat(1)));
    for (size_t j = 0; j < d; ++j) {
      RatVec row(n);
      for (size_t i = 0; i < n; ++i) row[i] = pts[i][j];
      cs.push_back(make_eq(row, p[j]));
    }
    return lp_feasible(cs, n).feasible;
  }
  // variables: mu_1..mu_n >= 1 with sum mu_i pts_i = (sum mu_i) p.
  for (size_t i = 0; i < n; ++i) {
    RatVec row(n, Rat(0));
    row[i] = 1;
    cs.push_back(make_ge(row, Rat(1)));
  }
  for (size_t j = 0; j < d; ++j) {
    RatVec row(n);
    for (size_t i = 0; i < n; ++i) row[i] = pts[i][j] - p[j];
    cs.push_back(make_eq(row, Rat(0)));
  }
  return lp_feasible(cs, n).feasible;
}

}  // namespace

VPolytope::VPolytope(size_t dim, std::vector<RatVec> points) : d_(dim) {
  for (const auto& p : points)
    if (p.size() != d_) throw std::invalid_argument("VPolytope: point dimension mismatch");
  // Dedupe.
  std::vector<RatVec> uniq;
  for (auto& p : points) {
    bool seen = false;
    for (const auto& q : uniq) seen = seen || q == p;
    if (!seen) uniq.push_back(std::move(p));
  }
  if (uniq.empty()) throw std::invalid_argument("VPolytope: no points");
  // Keep extreme points only.
  std::vector<bool> keep(uniq.size(), true);
  for (size_t i = 0; i < uniq.size(); ++i) {
    std::vector<RatVec> others;
    for (size_t j = 0; j < uniq.size(); ++j)
      if (j != i && keep[j]) others.push_back(uniq[j]);
    if (!others.empty() && in_convex_hull(others, uniq[i], false)) keep[i] = false;
  }
  for (size_t i = 0; i < uniq.size(); ++i)
    if (keep[i]) verts_.push_back(uniq[i]);

  // Affine dimension = rank of (v_i - v_0).
  RatMat diffs;
  for (size_t i = 1; i < verts_.size(); ++i) {
    RatVec row(d_);
    for (size_t j = 0; j < d_; ++j) row[j] = verts_[i][j] - verts_[0][j];
    diffs.push_back(std::move(row));
  }
  affine_dim_ = diffs.empty() ? 0 : rat_rank(diffs);
  if (affine_dim_ == d_) build_facets();
}

void VPolytope::build_facets() {
  // Every facet of a full-dimensional polytope spans a hyperplane through d
  // affinely independent vertices, so enumerating d-subsets finds them all.
  size_t n = verts_.size();
  std::vector<size_t> comb(d_);
  for (size_t i = 0; i < d_; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    size_t i = d_;
    while (i-- > 0) {
      if (comb[i] + (d_ - i) < n) {
        ++comb[i];
        for (size_t j = i + 1; j < d_; ++j) comb[j] = comb[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (n < d_) return;
  do {
    // Hyperplane through the selected vertices: kernel of [v_i | -1].
    RatMat sys;
    for (size_t i = 0; i < d_; ++i) {
      RatVec row(d_ + 1);
      for (size_t j = 0; j < d_; ++j) row[j] = verts_[comb[i]][j];
      row[d_] = -1;
      sys.push_back(std::move(row));
    }
    auto kern = rat_kernel(sys);
    if (kern.size() != 1) continue;  // points not affinely independent
    IntVec nc = primitive_integer(kern[0]);
    IntVec normal(nc.begin(), nc.end() - 1);
    BigInt rhs = nc.back();
    // All vertices must be on one side.
    int side = 0;
    bool facet = true;
    for (const auto& v : verts_) {
      Rat val(0);
      for (size_t j = 0; j < d_; ++j) val += Rat(normal[j]) * v[j];
      Rat diff = val - Rat(rhs);
      if (diff == 0) continue;
      int s = sign(diff);
      if (side == 0) side = s;
      else if (side != s) {
        facet = false;
        break;
      }
    }
    if (!facet || side == 0) continue;
    if (side > 0) {
      for (auto& e : normal) e = -e;
      rhs = -rhs;
    }
    bool dup = false;
    for (const auto& f : facets_) dup = dup || (f.normal == normal && f.rhs == rhs);
    if (!dup) facets_.push_back({std::move(normal), std::move(rhs)});
  } while (advance());
}

bool VPolytope::is_vertex(const RatVec& p) const {
  for (const auto& v : verts_)
    if (v == p) return true;
  return false;
}

Membership VPolytope::contains(const RatVec& p) const {
  if (p.size() != d_) throw std::invalid_argument("VPolytope::contains: dimension mismatch");
  if (affine_dim_ == d_) {
    bool boundary = false;
    for (const auto& f : facets_) {
      Rat val(0);
      for (size_t j = 0; j < d_; ++j) val += Rat(f.normal[j]) * p[j];
      Rat diff = val - Rat(f.rhs);
      if (diff > 0) return Membership::Outside;
      if (diff == 0) boundary = true;
    }
    return boundary ? Membership::Boundary : Membership::Interior;
  }
  return contains_lp(p);
}

Membership VPolytope::contains_lp(const RatVec& p) const {
  if (p.size() != d_) throw std::invalid_argument("VPolytope::contains_lp: dimension mismatch");
  if (!in_convex_hull(verts_, p, false)) return Membership::Outside;
  if (affine_dim_ < d_) return Membership::Boundary;
  return in_convex_hull(verts_, p, true) ? Membership::Interior : Membership::Boundary;
}

std::vector<IntVec> VPolytope::lattice_points() const {
  // Integer bounding box scan; membership is exact.
  IntVec lo(d_), hi(d_);
  for (size_t j = 0; j < d_; ++j) {
    Rat mn = verts_[0][j], mx = verts_[0][j];
    for (const auto& v : verts_) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn);
    hi[j] = rat_floor(mx);
    if (lo[j] > hi[j]) return {};
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  RatVec curq(d_);
  for (;;) {
    for (size_t j = 0; j < d_; ++j) curq[j] = Rat(cur[j]);
    if (contains(curq) != Membership::Outside) out.push_back(cur);
    size_t j = d_;
    while (j-- > 0) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (size_t t = j + 1; t < d_; ++t) cur[t] = lo[t];
        break;
      }
      if (j == 0) return out;
    }
  }
}

std::vector<IntVec> VPolytope::k_fold_points(const BigInt& k) const {
  if (k <= 0) throw std::invalid_argument("k_fold_points: k must be positive");
  IntVec lo(d_), hi(d_);
  for (size_t j = 0; j < d_; ++j) {
    Rat mn = verts_[0][j], mx = verts_[0][j];
    for (const auto& v : verts_) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn / Rat(k));
    hi[j] = rat_floor(mx / Rat(k));
    if (lo[j] > hi[j]) return {};
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  RatVec curq(d_);
  for (;;) {
    for (size_t j = 0; j < d_; ++j) curq[j] = Rat(cur[j] * k);
    if (contains(curq) != Membership::Outside) {
      IntVec scaled(d_);
      for (size_t j = 0; j < d_; ++j) scaled[j] = cur[j] * k;
      out.push_back(std::move(scaled));
    }
    size_t j = d_;
    while (j-- > 0) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (size_t t = j + 1; t < d_; ++t) cur[t] = lo[t];
        break;
      }
      if (j == 0) {
        std::sort(out.begin(), out.end(), lex_less);
        return out;
      }
    }
  }
}

bool VPolytope::is_k_empty(const BigInt& k) const {
  for (const auto& p : k_fold_points(k)) {
    RatVec q(d_);
    for (size_t j = 0; j < d_; ++j) q[j] = Rat(p[j]);
    if (!is_vertex(q)) return false;
  }
  return true;
}

VPolytope VPolytope::scaled(const Rat& factor) const {
  if (factor <= 0) throw std::invalid_argument("VPolytope::scaled: factor must be positive");
  std::vector<RatVec> pts = verts_;
  for (auto& p : pts)
    for (auto& c : p) c *= factor;
  return VPolytope(d_, std::move(pts));
}

std::optional<GorensteinData> q_gorenstein(const VPolytope& p) {
  size_t d = p.dim();
  RatVec zero(d, Rat(0));
  if (!p.is_vertex(zero)) throw std::invalid_argument("q_gorenstein: 0 is not a vertex");
  if (p.affine_dim() != d)
    throw std::invalid_argument("q_gorenstein: polytope is not full-dimensional");
  // alpha . v - index = 0 for every nonzero vertex; a one-dimensional kernel
  // pins (alpha, index) up to scale.
  RatMat sys;
  for (const auto& v : p.vertices()) {
    if (v == zero) continue;
    RatVec row(d + 1);
    for (size_t j = 0; j < d; ++j) row[j] = v[j];
    row[d] = -1;
    sys.push_back(std::move(row));
  }
  auto kern = rat_kernel(sys);
  if (kern.size() != 1) return std::nullopt;
  IntVec sol = primitive_integer(kern[0]);
  BigInt index = sol.back();
  IntVec alpha(sol.begin(), sol.end() - 1);
  if (index == 0) return std::nullopt;
  if (index < 0) {
    index = -index;
    for (auto& e : alpha) e = -e;
  }
  return GorensteinData{std::move(alpha), std::move(index)};
}

PolytopeVerdict is_canonical_polytope(const VPolytope& p) {
  auto gor = q_gorenstein(p);
  if (!gor) throw std::invalid_argument("is_canonical_polytope: not Q-Gorenstein");
  for (const auto& pt : p.lattice_points()) {
    bool zero = true;
    for (const auto& c : pt) zero = zero && c == 0;
    if (zero) continue;
    BigInt val(0);
    for (size_t j = 0; j < pt.size(); ++j) val += gor->alpha[j] * pt[j];
    if (val != gor->index) return {false, pt};
  }
  return {true, std::nullopt};
}

PolytopeVerdict is_terminal_polytope(const VPolytope& p) {
  if (!q_gorenstein(p)) throw std::invalid_argument("is_terminal_polytope: not Q-Gorenstein");
  for (const auto& pt : p.lattice_points()) {
    RatVec q(pt.size());
    for (size_t j = 0; j < pt.size(); ++j) q[j] = Rat(pt[j]);
    if (!p.is_vertex(q)) return {false, pt};
  }
  return {true, std::nullopt};
}

}  // namespace latgeo

// Classification machinery for k-empty lattice triangles: a_P values,
// standard forms under k-affine unimodular equivalence, Farey sequences and
// strips, spikes, and the enumeration of sporadic minimal triangles.
//
// Coordinates are 64-bit: every quantity the enumeration touches is bounded
// by a small multiple of the sporadic bound (k^2-1)k-1, far below overflow.
#pragma once

#include <latgeo/bigint.hpp>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace latgeo::kempty {

using I64 = long long;

struct Pt {
  I64 x = 0, y = 0;
  friend bool operator==(const Pt&, const Pt&) = default;
};

struct LatticeTriangle {
  Pt v0, v1, v2;  // pairwise distinct, non-collinear
};

/// T(v) = A v + w with |det A| = 1 and w in k.Z^2.
struct AffK {
  std::array<std::array<I64, 2>, 2> a{{{1, 0}, {0, 1}}};
  Pt w;
  I64 k = 1;
};

Pt apply(const AffK& t, const Pt& p);
LatticeTriangle apply(const AffK& t, const LatticeTriangle& s);
AffK compose(const AffK& outer, const AffK& inner);
bool valid(const AffK& t);

/// conv((0,0), (0,a), (x,y)) with (x,y) in Delta = {0 <= y < x}.
struct StandardTriangle {
  I64 a = 1, x = 1, y = 0;
  I64 k = 1;
  friend bool operator==(const StandardTriangle&, const StandardTriangle&) = default;

  LatticeTriangle triangle() const { return {{0, 0}, {0, a}, {x, y}}; }
};

struct FareyNumber {
  I64 f1 = 0, f2 = 1;  // 0 <= f1 < f2, gcd = 1
  friend bool operator==(const FareyNumber&, const FareyNumber&) = default;
};

struct FareyStrip {
  FareyNumber f;
  I64 k = 1;
  bool upper_strict = false;  // exactly when f2 == k
};

struct Spike {
  FareyNumber f;
  I64 i = 0;
  std::array<std::pair<Rat, Rat>, 3> vertices;
  Rat area;
};

I64 gcd64(I64 a, I64 b);

/// Triangle helpers (exact 64-bit arithmetic).
bool collinear(const LatticeTriangle& s);
bool triangle_contains(const LatticeTriangle& s, const Pt& p);  // closed
std::vector<Pt> k_fold_points_in(const LatticeTriangle& s, I64 k);
bool is_k_empty(const LatticeTriangle& s, I64 k);
I64 count_lattice_points(const LatticeTriangle& s);

/// min over edges with a k-fold vertex of (interior lattice points) + 1.
/// Works for any lattice polygon given as a cyclic vertex list.
I64 a_value(const std::vector<Pt>& polygon, I64 k);

/// The unique standard form k-equivalent to s, plus the transform realizing
/// it. Requires s k-empty with at least one vertex in k.Z^2.
std::pair<StandardTriangle, AffK> standard_form(const LatticeTriangle& s, I64 k);

/// Reduced fractions in [0,1) with denominator <= k, ascending.
std::vector<FareyNumber> farey_sequence(I64 k);
std::vector<FareyStrip> farey_strips(I64 k);

/// Containment of the triangle minus its exempt vertices (those in k.Z^2)
/// in the strip, decided on vertex values val(p) = f2 p_y - f1 p_x.
bool strip_contains(const LatticeTriangle& s, const FareyStrip& strip);

/// Closed-form spike attached to F_{k,f} at offset i (f2 != k, i > k - f2).
Spike spike_vertices(I64 k, const FareyNumber& f, I64 i);

/// Upper bound (k^2-1)k - 1 for sporadic apex x-coordinates.
I64 sporadic_bound(I64 k);

/// Whether conv((0,0),(0,1),(x,y)) satisfies standard-form conditions
/// (ii)/(iii) for the given k (condition (i) holds by construction).
bool minimal_standard_conditions(I64 x, I64 y, I64 k);

/// All minimal sporadic k-empty standard triangles, sorted by (x, y).
std::vector<StandardTriangle> enumerate_sporadic_minimal(I64 k);

bool k_equivalent(const LatticeTriangle& s1, const LatticeTriangle& s2, I64 k);

}  // namespace latgeo::kempty

// Exact V-representation polytopes over Q in low dimension: lattice point
// enumeration, membership classification, k-fold points, Q-Gorenstein data
// and the canonical/terminal predicates.
#pragma once

#include <latgeo/bigint.hpp>
#include <latgeo/intmat.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace latgeo {

enum class Membership { Interior, Boundary, Outside };

/// alpha . v = index for every nonzero vertex v, with alpha integral
/// primitive and index minimal positive.
struct GorensteinData {
  IntVec alpha;
  BigInt index;
};

struct PolytopeVerdict {
  bool ok = false;
  std::optional<IntVec> witness;  // violating lattice point on failure
};

class VPolytope {
 public:
  VPolytope() = default;  // empty shell; assign before use

  /// Builds the polytope from a point cloud; duplicates and non-extreme
  /// points are removed, so vertices() is exactly the vertex set.
  VPolytope(size_t dim, std::vector<RatVec> points);

  size_t dim() const { return d_; }
  size_t affine_dim() const { return affine_dim_; }
  const std::vector<RatVec>& vertices() const { return verts_; }

  bool is_vertex(const RatVec& p) const;

  /// Exact membership classification. Interior means topological interior
  /// in the ambient space; lower-dimensional polytopes have none.
  Membership contains(const RatVec& p) const;

  /// Same classification computed by convex-combination feasibility (the
  /// defining route); contains() must agree with it everywhere.
  Membership contains_lp(const RatVec& p) const;

  /// All integer points of the closed polytope, in lexicographic order.
  std::vector<IntVec> lattice_points() const;

  /// P cap k.Z^d, lexicographic.
  std::vector<IntVec> k_fold_points(const BigInt& k) const;

  /// Every k-fold point is a vertex.
  bool is_k_empty(const BigInt& k) const;

  /// Scale by a positive rational factor.
  VPolytope scaled(const Rat& factor) const;

 private:
  struct Facet {
    IntVec normal;  // normal . x <= rhs holds on the polytope
    BigInt rhs;
  };

  void build_facets();

  size_t d_ = 0;
  size_t affine_dim_ = 0;
  std::vector<RatVec> verts_;
  std::vector<Facet> facets_;  // only when full-dimensional
};

/// Q-Gorenstein data of conv(0, v_1, ..., v_r); 0 must be a vertex and the
/// polytope full-dimensional. Returns nothing when the nonzero vertices are
/// not on a common affine hyperplane with positive integral level.
std::optional<GorensteinData> q_gorenstein(const VPolytope& p);

/// Canonical: every nonzero lattice point lies on the Gorenstein hyperplane.
/// Errors when the polytope is not Q-Gorenstein.
PolytopeVerdict is_canonical_polytope(const VPolytope& p);

/// Terminal: the only lattice points are the vertices.
PolytopeVerdict is_terminal_polytope(const VPolytope& p);

}  // namespace latgeo

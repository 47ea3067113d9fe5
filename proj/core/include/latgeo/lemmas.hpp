// Closed-form predicates for the rational-polygon lemmas and the builders
// for the three-dimensional canonical-polytope catalog cases.
#pragma once

#include <latgeo/bigint.hpp>
#include <latgeo/polytope.hpp>

namespace latgeo {

/// conv((0,0),(k,iota),(k+1/q,iota)) with the origin: canonical iff some
/// integral 0 < c < q has k*c = -1 mod iota.
bool ncone_canonical(const BigInt& k, const BigInt& iota, const BigInt& q);

enum class CorollaryVariant { Halfcone, Halfhalfcone, C13, C1313 };

/// The stated closed-form condition of the respective corollary.
bool corollary_predicate(CorollaryVariant variant, const BigInt& k, const BigInt& iota);

/// Canonicity of conv(0,(k,iota),(k+2/5,iota)), computed on the polygon;
/// provably equal to the C13 predicate.
bool lemma_2_5(const BigInt& k, const BigInt& iota);

/// conv((0,0),(k+1/2,iota),(k+4/5,iota)) is lattice-free away from the
/// origin iff k = -1, k = 0, or k = iota/2 - 1 with iota even.
bool cone_1245_lattice_free(const BigInt& k, const BigInt& iota);

/// conv((0,0),(i,k+1/2),(j,k+1/2)) with i != j is lattice-free away from the
/// origin iff k = 0.
bool halfheight_lattice_free(const BigInt& i, const BigInt& j, const BigInt& k);

// Polygon builders shared with the brute-force oracles in the test suite.
VPolytope ncone_polygon(const BigInt& k, const BigInt& iota, const BigInt& q);
VPolytope two_sided_polygon(const BigInt& k, const BigInt& iota, const BigInt& q);
VPolytope lemma_2_5_polygon(const BigInt& k, const BigInt& iota);
VPolytope cone_1245_polygon(const BigInt& k, const BigInt& iota);
VPolytope halfheight_polygon(const BigInt& i, const BigInt& j, const BigInt& k);

/// One case of the three-dimensional catalog of canonical lattice polytopes.
struct IICase {
  enum class Id { II, III, IV, V, VI };
  Id id;
  BigInt n = 1, m = 1, iota = 2;  // as applicable to the case
};

/// The listed polytope with vertex 0 prepended; parameter ranges enforced.
VPolytope ii_polytope(const IICase& c);

/// The index-iota unit square over (a, b): canonical only for iota = 1.
VPolytope quadrangle_polytope(const BigInt& a, const BigInt& b, const BigInt& iota);

}  // namespace latgeo

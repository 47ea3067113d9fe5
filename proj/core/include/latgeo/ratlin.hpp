// Small exact linear algebra over the rationals: elimination, rank,
// linear solves and kernel bases. Everything here is dense and sized for
// the tiny systems that show up in low-dimensional lattice geometry.
#pragma once

#include <latgeo/bigint.hpp>

#include <optional>
#include <vector>

namespace latgeo {

using RatMat = std::vector<RatVec>;  // row-major, possibly ragged-checked by callers

size_t rat_rank(RatMat m);

/// Solve A x = b exactly. Returns one solution if the system is consistent.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// Basis of the (right) kernel of A.
std::vector<RatVec> rat_kernel(RatMat a);

/// Scale a rational vector to a primitive integer vector (clears denominators,
/// divides by the gcd). Errors on the zero vector.
IntVec primitive_integer(const RatVec& v);

}  // namespace latgeo

// Smith normal form over the integers, with both transforms tracked.
#pragma once

#include <latgeo/intmat.hpp>

namespace latgeo {

/// V * M * W = S with V, W unimodular and S diagonal, the diagonal entries
/// nonnegative and forming a divisibility chain d1 | d2 | ...
struct SmithDecomp {
  IntMat s;
  IntMat v;  // rows(M) x rows(M)
  IntMat w;  // cols(M) x cols(M)
  IntVec divisors;  // diagonal of s, length min(rows, cols)
};

/// Deterministic SNF: the pivot is the nonzero entry of minimal absolute
/// value in the trailing submatrix, ties broken row-major.
SmithDecomp snf(const IntMat& m);

}  // namespace latgeo

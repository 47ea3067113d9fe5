// Class group, degree matrix, Cox-ring presentation and anticanonical class
// of a defining matrix, via Smith normal form of the transpose.
#pragma once

#include <latgeo/cplxone.hpp>
#include <latgeo/intmat.hpp>
#include <latgeo/snf.hpp>

#include <string>
#include <vector>

namespace latgeo {

/// Z^free_rank + sum Z/torsion_i, torsion entries >= 2 in divisibility order.
struct ClassGroup {
  size_t free_rank = 0;
  IntVec torsion;
};

/// Rows grade the n+m variables: torsion rows first (entries reduced into
/// [0, modulus)), then free rows. Column j is deg of variable j.
struct DegreeMatrix {
  IntVec torsion_moduli;
  std::vector<IntVec> torsion_rows;
  std::vector<IntVec> free_rows;

  size_t num_vars() const {
    if (!torsion_rows.empty()) return torsion_rows[0].size();
    if (!free_rows.empty()) return free_rows[0].size();
    return 0;
  }
};

/// An element of the class group in (torsion, free) coordinates.
struct KElement {
  IntVec torsion_coords;  // reduced into [0, modulus)
  IntVec free_coords;
};

bool operator==(const KElement& a, const KElement& b);

/// Class group and degree matrix from an integer matrix whose columns are
/// the ray generators (SNF of the transpose; Q = matching rows of V).
std::pair<ClassGroup, DegreeMatrix> class_group(const IntMat& p);
std::pair<ClassGroup, DegreeMatrix> class_group(const DefiningMatrix& p);

/// Image of an exponent vector under the grading.
KElement degree_of(const DegreeMatrix& q, const IntVec& exponent);

KElement k_add(const DegreeMatrix& q, const KElement& a, const KElement& b);
KElement k_sub(const DegreeMatrix& q, const KElement& a, const KElement& b);

/// Order of an element (0 = infinite).
BigInt k_element_order(const DegreeMatrix& q, const KElement& e);

struct CoxMonomial {
  BigInt coeff;
  IntVec exponents;  // over the n+m variables
};

struct CoxRelation {
  std::array<CoxMonomial, 3> monomials;  // (i+1) T_i^{l_i} + T_{i+1}^{...} + T_{i+2}^{...}
};

struct CoxPresentation {
  std::vector<std::string> variables;  // T(i,j) block variables then S(k)
  std::vector<CoxRelation> relations;  // r-1 trinomials
};

/// The r-1 trinomial relations; each is verified K-homogeneous under the
/// grading of class_group(p).
CoxPresentation cox_presentation(const DefiningMatrix& p);

/// sum_i deg(g_i) - Q(e_Sigma) in the class group.
KElement anticanonical_class(const DefiningMatrix& p);

}  // namespace latgeo

#include <latgeo/coxring.hpp>

#include <stdexcept>

namespace latgeo {

bool operator==(const KElement& a, const KElement& b) {
  return a.torsion_coords == b.torsion_coords && a.free_coords == b.free_coords;
}

std::pair<ClassGroup, DegreeMatrix> class_group(const IntMat& p) {
  IntMat pstar = p.transpose();  // (n+m) x (r+2)
  SmithDecomp dec = snf(pstar);
  size_t nm = pstar.rows();
  size_t rank = 0;
  for (const auto& d : dec.divisors)
    if (d != 0) ++rank;

  ClassGroup g;
  g.free_rank = nm - rank;
  size_t first_torsion = rank;
  for (size_t i = 0; i < rank; ++i)
    if (dec.divisors[i] > 1) {
      first_torsion = std::min(first_torsion, i);
      g.torsion.push_back(dec.divisors[i]);
    }

  DegreeMatrix q;
  q.torsion_moduli = g.torsion;
  for (size_t i = first_torsion; i < rank; ++i) {
    if (dec.divisors[i] <= 1) continue;
    IntVec row = dec.v.row(i);
    for (auto& e : row) e = mod_floor(e, dec.divisors[i]);
    q.torsion_rows.push_back(std::move(row));
  }
  for (size_t i = rank; i < nm; ++i) q.free_rows.push_back(dec.v.row(i));
  return {std::move(g), std::move(q)};
}

std::pair<ClassGroup, DegreeMatrix> class_group(const DefiningMatrix& p) {
  return class_group(p.assemble());
}

KElement degree_of(const DegreeMatrix& q, const IntVec& exponent) {
  size_t nv = q.num_vars();
  if (exponent.size() != nv) throw std::invalid_argument("degree_of: arity mismatch");
  KElement e;
  for (size_t i = 0; i < q.torsion_rows.size(); ++i) {
    BigInt s = 0;
    for (size_t j = 0; j < nv; ++j) s += q.torsion_rows[i][j] * exponent[j];
    e.torsion_coords.push_back(mod_floor(s, q.torsion_moduli[i]));
  }
  for (const auto& row : q.free_rows) {
    BigInt s = 0;
    for (size_t j = 0; j < nv; ++j) s += row[j] * exponent[j];
    e.free_coords.push_back(s);
  }
  return e;
}

KElement k_add(const DegreeMatrix& q, const KElement& a, const KElement& b) {
  KElement out;
  for (size_t i = 0; i < a.torsion_coords.size(); ++i)
    out.torsion_coords.push_back(
        mod_floor(a.torsion_coords[i] + b.torsion_coords[i], q.torsion_moduli[i]));
  for (size_t i = 0; i < a.free_coords.size(); ++i)
    out.free_coords.push_back(a.free_coords[i] + b.free_coords[i]);
  return out;
}

KElement k_sub(const DegreeMatrix& q, const KElement& a, const KElement& b) {
  KElement out;
  for (size_t i = 0; i < a.torsion_coords.size(); ++i)
    out.torsion_coords.push_back(
        mod_floor(a.torsion_coords[i] - b.torsion_coords[i], q.torsion_moduli[i]));
  for (size_t i = 0; i < a.free_coords.size(); ++i)
    out.free_coords.push_back(a.free_coords[i] - b.free_coords[i]);
  return out;
}

BigInt k_element_order(const DegreeMatrix& q, const KElement& e) {
  for (const auto& c : e.free_coords)
    if (c != 0) return 0;
  BigInt ord = 1;
  for (size_t i = 0; i < e.torsion_coords.size(); ++i) {
    BigInt d = q.torsion_moduli[i];
    BigInt g = big_gcd(e.torsion_coords[i], d);
    ord = big_lcm(ord, d / g);
  }
  return ord;
}

CoxPresentation cox_presentation(const DefiningMatrix& p) {
  CoxPresentation out;
  size_t nm = p.num_cols();
  std::vector<size_t> block_offset(p.blocks.size());
  {
    size_t off = 0;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
      block_offset[i] = off;
      off += p.blocks[i].l.size();
      for (size_t j = 0; j < p.blocks[i].l.size(); ++j)
        out.variables.push_back("T(" + std::to_string(i) + "," + std::to_string(j + 1) + ")");
    }
  }
  for (size_t k = 0; k < p.m(); ++k)
    out.variables.push_back("S(" + std::to_string(k + 1) + ")");

  auto block_monomial = [&](size_t i, const BigInt& coeff) {
    CoxMonomial m{coeff, IntVec(nm, BigInt(0))};
    for (size_t j = 0; j < p.blocks[i].l.size(); ++j)
      m.exponents[block_offset[i] + j] = p.blocks[i].l[j];
    return m;
  };

  int r = p.r();
  for (int i = 0; i + 2 <= r; ++i) {
    CoxRelation rel{{block_monomial(i, BigInt(i + 1)), block_monomial(i + 1, BigInt(1)),
                     block_monomial(i + 2, BigInt(1))}};
    out.relations.push_back(std::move(rel));
  }

  // Each relation must be K-homogeneous under the grading.
  auto [group, q] = class_group(p);
  (void)group;
  for (const auto& rel : out.relations) {
    KElement d0 = degree_of(q, rel.monomials[0].exponents);
    for (int t = 1; t < 3; ++t)
      if (!(degree_of(q, rel.monomials[t].exponents) == d0))
        throw std::logic_error("cox_presentation: relation is not K-homogeneous");
  }
  return out;
}

KElement anticanonical_class(const DefiningMatrix& p) {
  auto [group, q] = class_group(p);
  (void)group;
  CoxPresentation pres = cox_presentation(p);
  KElement acc = degree_of(q, IntVec(p.num_cols(), BigInt(0)));  // zero element
  for (const auto& rel : pres.relations)
    acc = k_add(q, acc, degree_of(q, rel.monomials[0].exponents));
  KElement esum = degree_of(q, IntVec(p.num_cols(), BigInt(1)));
  return k_sub(q, acc, esum);
}

}  // namespace latgeo

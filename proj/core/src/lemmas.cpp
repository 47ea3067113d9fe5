#include <latgeo/lemmas.hpp>

#include <stdexcept>

namespace latgeo {

namespace {

void require_iota(const BigInt& iota) {
  if (iota < 2) throw std::invalid_argument("lemmas: iota >= 2 required");
}

VPolytope polygon2(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  return VPolytope(2, {{Rat(0), Rat(0)}, {x1, y1}, {x2, y2}});
}

}  // namespace

bool ncone_canonical(const BigInt& k, const BigInt& iota, const BigInt& q) {
  require_iota(iota);
  if (q < 2) throw std::invalid_argument("ncone_canonical: q >= 2 required");
  for (BigInt c = 1; c < q; ++c)
    if (mod_floor(k * c + 1, iota) == 0) return true;
  return false;
}

bool corollary_predicate(CorollaryVariant variant, const BigInt& k, const BigInt& iota) {
  require_iota(iota);
  switch (variant) {
    case CorollaryVariant::Halfcone:
      return mod_floor(k + 1, iota) == 0;
    case CorollaryVariant::Halfhalfcone:
      return iota == 2 && mod_floor(k, 2) == 1;
    case CorollaryVariant::C13:
      if (mod_floor(k + 1, iota) == 0) return true;
      return mod_floor(iota, 2) == 1 && mod_floor(k - (iota - 1) / 2, iota) == 0;
    case CorollaryVariant::C1313:
      if (iota == 2) return mod_floor(k, 2) == 1;
      if (iota == 3) {
        BigInt r = mod_floor(k, 3);
        return r == 1 || r == 2;
      }
      return false;
  }
  throw std::invalid_argument("corollary_predicate: unknown variant");
}

bool lemma_2_5(const BigInt& k, const BigInt& iota) {
  require_iota(iota);
  return is_canonical_polytope(lemma_2_5_polygon(k, iota)).ok;
}

bool cone_1245_lattice_free(const BigInt& k, const BigInt& iota) {
  // Lattice equivalence moves k by multiples of iota (shear fixing the
  // height-iota line), so the three listed shapes are the classes of
  // k = -1, k = 0 and k = iota/2 - 1 (iota even) modulo iota.
  require_iota(iota);
  BigInt r = mod_floor(k, iota);
  if (r == mod_floor(BigInt(-1), iota) || r == 0) return true;
  return mod_floor(iota, 2) == 0 && r == mod_floor(iota / 2 - 1, iota);
}

bool halfheight_lattice_free(const BigInt& i, const BigInt& j, const BigInt& k) {
  if (i == j) throw std::invalid_argument("halfheight_lattice_free: i != j required");
  if (k < 0) throw std::invalid_argument("halfheight_lattice_free: k >= 0 required");
  return k == 0;
}

VPolytope ncone_polygon(const BigInt& k, const BigInt& iota, const BigInt& q) {
  return polygon2(Rat(k), Rat(iota), Rat(k) + Rat(1, q), Rat(iota));
}

VPolytope two_sided_polygon(const BigInt& k, const BigInt& iota, const BigInt& q) {
  return polygon2(Rat(k) - Rat(1, q), Rat(iota), Rat(k) + Rat(1, q), Rat(iota));
}

VPolytope lemma_2_5_polygon(const BigInt& k, const BigInt& iota) {
  return polygon2(Rat(k), Rat(iota), Rat(k) + Rat(2, 5), Rat(iota));
}

VPolytope cone_1245_polygon(const BigInt& k, const BigInt& iota) {
  return polygon2(Rat(k) + Rat(1, 2), Rat(iota), Rat(k) + Rat(4, 5), Rat(iota));
}

VPolytope halfheight_polygon(const BigInt& i, const BigInt& j, const BigInt& k) {
  Rat h = Rat(k) + Rat(1, 2);
  return polygon2(Rat(i), h, Rat(j), h);
}

VPolytope ii_polytope(const IICase& c) {
  using Id = IICase::Id;
  auto pt = [](BigInt x, BigInt y, BigInt z) {
    return RatVec{Rat(std::move(x)), Rat(std::move(y)), Rat(std::move(z))};
  };
  std::vector<RatVec> pts{pt(0, 0, 0)};
  switch (c.id) {
    case Id::II:
      if (c.n < 1 || c.m < 1) throw std::invalid_argument("ii_polytope: case (ii) needs n,m >= 1");
      pts.push_back(pt(1, 0, 2));
      pts.push_back(pt(1 + c.m, 1, 2));
      pts.push_back(pt(1, 2, 2));
      pts.push_back(pt(1 - c.n, 1, 2));
      break;
    case Id::III:
      if (c.n < 1 || c.m < 1 || c.iota < 2)
        throw std::invalid_argument("ii_polytope: case (iii) needs n,m >= 1, iota >= 2");
      if (big_gcd(c.n, c.iota) != 1)
        throw std::invalid_argument("ii_polytope: case (iii) needs gcd(n, iota) = 1");
      pts.push_back(pt(1, c.n, c.iota));
      pts.push_back(pt(0, c.n, c.iota));
      pts.push_back(pt(1, c.n + c.m, c.iota));
      break;
    case Id::IV:
      if (c.m < 2) throw std::invalid_argument("ii_polytope: case (iv) needs m >= 2");
      pts.push_back(pt(1, 1, 2));
      pts.push_back(pt(0, 1, 2));
      pts.push_back(pt(2, 1 + 2 * c.m, 2));
      break;
    case Id::V:
      pts.push_back(pt(1, -2, 2));
      pts.push_back(pt(-1, -1, 2));
      pts.push_back(pt(2, 1, 2));
      break;
    case Id::VI:
      pts.push_back(pt(1, -1, 3));
      pts.push_back(pt(0, -1, 3));
      pts.push_back(pt(2, 2, 3));
      break;
  }
  return VPolytope(3, std::move(pts));
}

VPolytope quadrangle_polytope(const BigInt& a, const BigInt& b, const BigInt& iota) {
  auto pt = [](BigInt x, BigInt y, BigInt z) {
    return RatVec{Rat(std::move(x)), Rat(std::move(y)), Rat(std::move(z))};
  };
  return VPolytope(3, {pt(0, 0, 0), pt(a, b, iota), pt(a + 1, b, iota), pt(a, b + 1, iota),
                       pt(a + 1, b + 1, iota)});
}

}  // namespace latgeo

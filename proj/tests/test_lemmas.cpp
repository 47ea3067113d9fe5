#include <doctest.h>

#include <latgeo/lemmas.hpp>

#include <numeric>

using namespace latgeo;

TEST_CASE("ncone_canonical on the named examples") {
  CHECK(ncone_canonical(1, 2, 2));
  CHECK_FALSE(ncone_canonical(0, 2, 2));
  CHECK(ncone_canonical(1, 3, 3));
  CHECK_THROWS(ncone_canonical(1, 1, 2));
}

TEST_CASE("corollary predicates on the named examples") {
  CHECK(corollary_predicate(CorollaryVariant::Halfhalfcone, 3, 2));
  CHECK_FALSE(corollary_predicate(CorollaryVariant::Halfhalfcone, 2, 2));
  CHECK(corollary_predicate(CorollaryVariant::C1313, 1, 3));
  CHECK(corollary_predicate(CorollaryVariant::Halfcone, 1, 2));
  CHECK(corollary_predicate(CorollaryVariant::C13, 1, 3));
}

TEST_CASE("lemma_2_5 mirrors the c13 predicate at the named points") {
  CHECK(lemma_2_5(1, 3) == corollary_predicate(CorollaryVariant::C13, 1, 3));
  CHECK(lemma_2_5(0, 2) == corollary_predicate(CorollaryVariant::C13, 0, 2));
  CHECK(lemma_2_5(1, 2) == corollary_predicate(CorollaryVariant::C13, 1, 2));
  CHECK(lemma_2_5(1, 3));
  CHECK_FALSE(lemma_2_5(0, 2));
  CHECK(lemma_2_5(1, 2));
}

TEST_CASE("cone_1245_lattice_free on the named examples") {
  CHECK(cone_1245_lattice_free(-1, 3));
  CHECK(cone_1245_lattice_free(0, 5));
  CHECK_FALSE(cone_1245_lattice_free(1, 3));
  // Brute-force spot checks.
  for (long k = -3; k <= 3; ++k)
    for (long iota = 2; iota <= 4; ++iota) {
      bool brute = true;
      for (const auto& pt : cone_1245_polygon(k, iota).lattice_points())
        if (!(pt[0] == 0 && pt[1] == 0)) brute = false;
      CHECK(cone_1245_lattice_free(k, iota) == brute);
    }
}

TEST_CASE("halfheight_lattice_free on the named examples") {
  CHECK(halfheight_lattice_free(0, 1, 0));
  CHECK_FALSE(halfheight_lattice_free(0, 1, 1));
  CHECK(halfheight_lattice_free(-3, 4, 0));
  CHECK_THROWS(halfheight_lattice_free(2, 2, 0));
}

TEST_CASE("ii_polytope on the named examples") {
  SUBCASE("case (v)") {
    auto p = ii_polytope({IICase::Id::V});
    CHECK(p.vertices().size() == 4);
    CHECK(p.is_vertex({Rat(1), Rat(-2), Rat(2)}));
    CHECK(p.is_vertex({Rat(-1), Rat(-1), Rat(2)}));
    CHECK(p.is_vertex({Rat(2), Rat(1), Rat(2)}));
  }
  SUBCASE("case (vi)") {
    auto p = ii_polytope({IICase::Id::VI});
    CHECK(p.is_vertex({Rat(1), Rat(-1), Rat(3)}));
    CHECK(p.is_vertex({Rat(0), Rat(-1), Rat(3)}));
    CHECK(p.is_vertex({Rat(2), Rat(2), Rat(3)}));
  }
  SUBCASE("case (iii) with n=m=1, iota=2") {
    auto p = ii_polytope({IICase::Id::III, 1, 1, 2});
    CHECK(p.is_vertex({Rat(1), Rat(1), Rat(2)}));
    CHECK(p.is_vertex({Rat(0), Rat(1), Rat(2)}));
    CHECK(p.is_vertex({Rat(1), Rat(2), Rat(2)}));
    CHECK(is_canonical_polytope(p).ok);
    CHECK(is_terminal_polytope(p).ok);
  }
  SUBCASE("constraints enforced") {
    CHECK_THROWS(ii_polytope({IICase::Id::III, 2, 1, 2}));  // gcd(n, iota) != 1
    CHECK_THROWS(ii_polytope({IICase::Id::IV, 1, 1, 2}));   // m >= 2
  }
}

TEST_CASE("every small ii_polytope is canonical; terminal only at (iii) m=1") {
  for (long n = 1; n <= 2; ++n)
    for (long m = 1; m <= 2; ++m) {
      auto pii = ii_polytope({IICase::Id::II, n, m, 2});
      CHECK(is_canonical_polytope(pii).ok);
      CHECK_FALSE(is_terminal_polytope(pii).ok);
      for (long iota = 2; iota <= 3; ++iota) {
        if (std::gcd(n, iota) != 1) continue;
        auto piii = ii_polytope({IICase::Id::III, n, m, iota});
        CHECK(is_canonical_polytope(piii).ok);
        CHECK(is_terminal_polytope(piii).ok == (m == 1));
      }
    }
  auto piv = ii_polytope({IICase::Id::IV, 1, 2, 2});
  CHECK(is_canonical_polytope(piv).ok);
  CHECK_FALSE(is_terminal_polytope(piv).ok);
  CHECK(is_canonical_polytope(ii_polytope({IICase::Id::V})).ok);
  CHECK(is_canonical_polytope(ii_polytope({IICase::Id::VI})).ok);
}

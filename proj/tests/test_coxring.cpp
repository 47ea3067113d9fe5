#include <doctest.h>

#include <latgeo/catalog.hpp>
#include <latgeo/coxring.hpp>
#include <latgeo/verify.hpp>

using namespace latgeo;

namespace {

IntMat toric_matrix(const VPolytope& p) {
  IntMat m(3, p.vertices().size() - 1);
  size_t c = 0;
  for (const auto& v : p.vertices()) {
    bool zero = true;
    for (const auto& x : v) zero = zero && x == 0;
    if (zero) continue;
    for (size_t r = 0; r < 3; ++r) m.at(r, c) = rat_num(v[r]);
    ++c;
  }
  return m;
}

}  // namespace

TEST_CASE("class groups of the toric catalog rows") {
  SUBCASE("case (iv) at m = 2: Z/8 with row ~ (2, 3, 7)") {
    auto inst = instantiate_toric("toric_iv", Json{{"m", 2}});
    auto [cl, q] = class_group(toric_matrix(inst.polytope));
    CHECK(cl.free_rank == 0);
    CHECK(cl.torsion == IntVec{8});
    REQUIRE(q.torsion_rows.size() == 1);
    CHECK(q_row_matches(q.torsion_rows[0], {2, 3, 7}, 8));
  }
  SUBCASE("case (vi): Z/9 with row ~ (1, 4, 7)") {
    auto inst = instantiate_toric("toric_vi", Json::object());
    auto [cl, q] = class_group(toric_matrix(inst.polytope));
    CHECK(cl.torsion == IntVec{9});
    REQUIRE(q.torsion_rows.size() == 1);
    CHECK(q_row_matches(q.torsion_rows[0], {1, 4, 7}, 9));
  }
  SUBCASE("case (ii) at n = m = 1: Z + Z/4") {
    auto inst = instantiate_toric("toric_ii", Json{{"n", 1}, {"m", 1}});
    auto [cl, q] = class_group(toric_matrix(inst.polytope));
    CHECK(cl.free_rank == 1);
    CHECK(cl.torsion == IntVec{4});
    CHECK(q.free_rows.size() == 1);
  }
  SUBCASE("case (ii) series: Z + Z/2gcd(2m, m+n)") {
    for (long n = 1; n <= 5; ++n)
      for (long m = 1; m <= 5; ++m) {
        auto inst = instantiate_toric("toric_ii", Json{{"n", n}, {"m", m}});
        auto [cl, q] = class_group(toric_matrix(inst.polytope));
        CHECK(cl.free_rank == 1);
        CHECK(cl.torsion == IntVec{BigInt(2 * std::gcd(2 * m, m + n))});
      }
  }
}

TEST_CASE("Q annihilates the rows of the defining matrix") {
  auto p1 = instantiate_matrix("P_1", Json::object()).matrix;
  auto [cl, q] = class_group(p1);
  IntMat m = p1.assemble();
  for (size_t r = 0; r < m.rows(); ++r) {
    KElement e = degree_of(q, m.row(r));
    for (const auto& c : e.torsion_coords) CHECK(c == 0);
    for (const auto& c : e.free_coords) CHECK(c == 0);
  }
  (void)cl;
}

TEST_CASE("cox_presentation on the named examples") {
  SUBCASE("P_1 has the single relation T01^3 T02 + T11^3 + T21^2") {
    auto pres = cox_presentation(instantiate_matrix("P_1", Json::object()).matrix);
    REQUIRE(pres.relations.size() == 1);
    const auto& rel = pres.relations[0];
    CHECK(rel.monomials[0].coeff == 1);
    CHECK(rel.monomials[0].exponents == IntVec{3, 1, 0, 0});
    CHECK(rel.monomials[1].exponents == IntVec{0, 0, 3, 0});
    CHECK(rel.monomials[2].exponents == IntVec{0, 0, 0, 2});
  }
  SUBCASE("an r = 3 matrix has two relations, the second with coefficient 2") {
    auto inst = instantiate_matrix("P_32", Json{{"zeta", 3}});
    auto pres = cox_presentation(inst.matrix);
    REQUIRE(pres.relations.size() == 2);
    CHECK(pres.relations[0].monomials[0].coeff == 1);
    CHECK(pres.relations[1].monomials[0].coeff == 2);
  }
}

TEST_CASE("anticanonical class orders") {
  SUBCASE("P_1 has an order-2 anticanonical class") {
    auto p = instantiate_matrix("P_1", Json::object()).matrix;
    auto [cl, q] = class_group(p);
    CHECK(k_element_order(q, anticanonical_class(p)) == 2);
    (void)cl;
  }
  SUBCASE("catalog cross-check: order of K equals iota on a sample") {
    for (const std::string& id : {"P_3", "P_6", "P_11", "P_22", "P_27"}) {
      auto inst = instantiate_matrix(id, Json::object());
      auto [cl, q] = class_group(inst.matrix);
      CHECK(k_element_order(q, anticanonical_class(inst.matrix)) == inst.expected_iota);
      (void)cl;
    }
  }
}

TEST_CASE("each relation is K-homogeneous across the fixed catalog") {
  for (const std::string& id : {"P_1", "P_2", "P_4", "P_7", "P_12", "P_17", "P_23"}) {
    auto inst = instantiate_matrix(id, Json::object());
    auto [cl, q] = class_group(inst.matrix);
    auto pres = cox_presentation(inst.matrix);  // throws if inhomogeneous
    for (const auto& rel : pres.relations) {
      KElement d0 = degree_of(q, rel.monomials[0].exponents);
      CHECK(degree_of(q, rel.monomials[1].exponents) == d0);
      CHECK(degree_of(q, rel.monomials[2].exponents) == d0);
    }
    (void)cl;
  }
}

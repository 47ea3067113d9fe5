#include <doctest.h>

#include <latgeo/catalog.hpp>
#include <latgeo/verify.hpp>

using namespace latgeo;

TEST_CASE("instantiate on the named examples") {
  SUBCASE("P_5 at l01 = 2 has first column (-2,-2,1,-2)") {
    auto inst = instantiate_matrix("P_5", Json{{"l01", 2}});
    IntVec col = inst.matrix.column(0, 0);
    CHECK(col == IntVec{-2, -2, 1, -2});
    CHECK(inst.matrix.num_cols() == 5);
  }
  SUBCASE("58a alias P_37 accepts (zeta,k,mu) = (3,2,1) and emits the matrix") {
    auto inst = instantiate_matrix(
        "P_37", Json{{"zeta", 3}, {"k", 2}, {"mu", 1}, {"r", 2}, {"d", Json::array({1})}});
    CHECK(validate(inst.matrix).ok());
    CHECK(inst.matrix.column(0, 0) == IntVec{-2, -2, 1, 0});
    CHECK(inst.matrix.column(1, 0) == IntVec{4, 0, 1, 2});
    auto info = normal_form_info(inst.matrix);
    CHECK(info.case_id == NFCase::VI);
    CHECK(info.iota == 2);
    CHECK(info.zeta == 3);
    CHECK(info.mu == 1);
  }
  SUBCASE("toric_iii at (n,m,iota) = (2,1,3)") {
    auto inst = instantiate_toric("toric_iii", Json{{"n", 2}, {"m", 1}, {"iota", 3}});
    CHECK(inst.polytope.is_vertex({Rat(1), Rat(2), Rat(3)}));
    CHECK(inst.polytope.is_vertex({Rat(0), Rat(2), Rat(3)}));
    CHECK(inst.polytope.is_vertex({Rat(1), Rat(3), Rat(3)}));
  }
  SUBCASE("constraint violations cite the constraint") {
    CHECK_THROWS_WITH_AS(instantiate_matrix("P_5", Json{{"l01", 1}}),
                         doctest::Contains("l01 >= 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        instantiate_matrix("P_37", Json{{"zeta", 3}, {"k", 1}, {"mu", 1}, {"r", 2},
                                        {"d", Json::array({1})}}),
        doctest::Contains("k*mu+1"), std::invalid_argument);
  }
}

TEST_CASE("catalog data file is well-formed") {
  const Json& data = catalog_data();
  CHECK(data.at("schema_version") == "1");
  CHECK(data.at("entries").size() >= 70);
  CHECK(data.at("negative_controls").size() >= 5);
  // Every matrix grid point instantiates and validates.
  auto ids = catalog_entry_ids();
  CHECK(std::find(ids.begin(), ids.end(), "P_1") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "toric_v") != ids.end());
}

TEST_CASE("every catalog grid point instantiates to a valid matrix") {
  auto instances = catalog_matrix_instances();
  CHECK(instances.size() >= 120);
  for (const auto& inst : instances) CHECK(validate(inst.matrix).ok());
}

TEST_CASE("spot verification: P_1 passes, the iota-3 control fails with its witness") {
  SUBCASE("P_1 verifies canonical, not terminal") {
    auto inst = instantiate_matrix("P_1", Json::object());
    auto v = verdict(inst.matrix);
    CHECK(v.canonical);
    CHECK_FALSE(v.terminal);
    CHECK(inst.expected_terminal == false);
  }
  SUBCASE("negative controls reproduce their published witnesses") {
    for (const auto& nc : negative_controls()) {
      auto v = verdict(nc.matrix);
      CHECK_FALSE(v.canonical);
      bool found = false;
      for (const auto& w : v.witnesses) {
        auto g = leaf_point_global(w.point, nc.matrix.r());
        if (g.size() != nc.expected_witness.size()) continue;
        bool same = true;
        for (size_t i = 0; i < g.size(); ++i) same = same && g[i] == Rat(nc.expected_witness[i]);
        found = found || same;
      }
      CHECK_MESSAGE(found, nc.id);
    }
  }
}

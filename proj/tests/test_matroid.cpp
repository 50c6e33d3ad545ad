#include <doctest.h>

#include "dctri/matroid.hpp"

using namespace dctri;

TEST_CASE("validation") {
  CHECK(validate(3, std::vector<ElementSet>{set_from_list({1, 2}), set_from_list({1, 3}), set_from_list({2, 3})}));
  auto bad = validate(4, std::vector<ElementSet>{set_from_list({1, 2}), set_from_list({3, 4})});
  CHECK(!bad);
  REQUIRE(bad.witness);
  CHECK(bad.witness->x >= 1);
  CHECK(!validate(2, std::vector<ElementSet>{set_from_list({1}), set_from_list({1, 2})}));
  CHECK(!validate(2, std::vector<ElementSet>{}));
  CHECK_THROWS_AS(Matroid::from_basis_lists(4, {{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(Matroid::from_basis_lists(2, {{3}}), Error);
}

TEST_CASE("constructors") {
  CHECK(Matroid::uniform(2, 4).bases().size() == 6);
  auto k4 = Matroid::graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(k4.bases().size() == 16);
  CHECK(k4.rank() == 3);
  CHECK(validate(k4));
  auto ds = Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
  CHECK(ds.size() == 4);
  CHECK(ds.bases().size() == 4);
  CHECK(Matroid::uniform(0, 3).bases().size() == 1);
  CHECK_THROWS_AS(Matroid::uniform(3, 2), Error);
  CHECK_THROWS_AS(Matroid::uniform(1, 17), Error);
}

TEST_CASE("minors") {
  auto u24 = Matroid::uniform(2, 4);
  CHECK(u24.delete_element(1) == Matroid::uniform(2, 3));
  CHECK(u24.contract_element(1) == Matroid::uniform(1, 3));
  auto ds = Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
  auto c = ds.contract_element(1);
  CHECK(c.size() == 3);
  CHECK(c.bases() == std::vector<ElementSet>{set_from_list({2}), set_from_list({3})});
  CHECK(c.labels() == std::vector<int>{2, 3, 4});

  auto lc = Matroid::from_basis_lists(4, {{2, 3}, {2, 4}});
  CHECK(lc.is_loop(1));
  CHECK(lc.is_coloop(2));
  CHECK_THROWS_AS(lc.contract_element(1), Error);
  CHECK_THROWS_AS(lc.delete_element(2), Error);
  auto u23 = Matroid::uniform(2, 3);
  for (int e = 1; e <= 3; ++e) {
    CHECK(!u23.is_loop(e));
    CHECK(!u23.is_coloop(e));
  }
}

TEST_CASE("rank and independence") {
  auto m = Matroid::from_basis_lists(4, {{2, 3}, {2, 4}});
  CHECK(m.rank(set_from_list({1})) == 0);
  CHECK(m.rank(set_from_list({3, 4})) == 1);
  CHECK(m.rank(set_from_list({1, 2, 3, 4})) == 2);
  CHECK(m.is_independent(set_from_list({2, 4})));
  CHECK(!m.is_independent(set_from_list({3, 4})));
  CHECK(Matroid::uniform(2, 3).independent_sets().size() == 7);
  CHECK(list_from_set(set_from_list({1, 5, 3})) == std::vector<int>{1, 3, 5});
}

TEST_CASE("minors of valid matroids are valid") {
  auto k4 = Matroid::graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  for (int e = 1; e <= 6; ++e) {
    CHECK(validate(k4.delete_element(e)));
    CHECK(validate(k4.contract_element(e)));
  }
}

#include <doctest.h>

#include "dctri/convex_hull.hpp"
#include "test_util.hpp"

using namespace dctri;
using testutil::iv;

namespace {

bool facet_valid(const std::vector<IntVector>& pts, const HullFacet& f) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Integer v = dot(f.normal, pts[i]);
    if (v > f.offset) return false;
    if ((v == f.offset) != f.points.test(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("square with a midpoint on an edge") {
  std::vector<IntVector> pts{iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({2, 2}), iv({1, 0}), iv({1, 1})};
  auto facets = convex_hull_facets(pts);
  CHECK(facets.size() == 4);
  for (const auto& f : facets) {
    CHECK(facet_valid(pts, f));
    if (f.normal == iv({0, -1})) CHECK(f.points.count() == 3);
  }
}

TEST_CASE("cube keeps its square facets whole") {
  std::vector<IntVector> pts;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) pts.push_back(iv({x, y, z}));
  auto facets = convex_hull_facets(pts);
  CHECK(facets.size() == 6);
  for (const auto& f : facets) {
    CHECK(f.points.count() == 4);
    CHECK(facet_valid(pts, f));
  }
}

TEST_CASE("segment and simplex") {
  std::vector<IntVector> seg{iv({3}), iv({0}), iv({1})};
  auto f = convex_hull_facets(seg);
  CHECK(f.size() == 2);
  for (const auto& x : f) CHECK(facet_valid(seg, x));

  std::vector<IntVector> tri{iv({0, 0}), iv({1, 0}), iv({0, 1})};
  CHECK(convex_hull_facets(tri).size() == 3);
  CHECK_THROWS_AS(convex_hull_facets(std::vector<IntVector>{iv({0, 0}), iv({1, 1})}), Error);
}

TEST_CASE("random point sets: every facet supports the set") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<IntVector> pts;
    std::set<IntVector> seen;
    while (pts.size() < 9) {
      IntVector p(d);
      for (auto& x : p) x = c(rng);
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (affine_dimension(pts) != static_cast<int>(d)) continue;
    auto facets = convex_hull_facets(pts);
    CHECK(facets.size() >= d + 1);
    for (const auto& f : facets) {
      CHECK(facet_valid(pts, f));
      CHECK(affine_dimension([&] {
              std::vector<IntVector> on;
              for (std::size_t i = 0; i < pts.size(); ++i)
                if (f.points.test(i)) on.push_back(pts[i]);
              return on;
            }()) == static_cast<int>(d) - 1);
    }
  }
}

TEST_CASE("affine bases") {
  std::vector<IntVector> pts{iv({0, 0}), iv({1, 1}), iv({2, 2}), iv({0, 1})};
  CHECK(greedy_affine_basis(pts) == std::vector<std::size_t>{0, 1, 3});
  CHECK(affine_dimension(pts) == 2);
  CHECK(affine_dimension(std::vector<IntVector>{}) == -1);
}

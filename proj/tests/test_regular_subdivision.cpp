#include <doctest.h>

#include <set>

#include "dctri/lattice_polytope.hpp"
#include "dctri/convex_hull.hpp"
#include "dctri/regular_subdivision.hpp"
#include "test_util.hpp"

using namespace dctri;
using testutil::iv;

namespace {

PointConfiguration line3() { return PointConfiguration({iv({0}), iv({1}), iv({2})}); }

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("lower hulls on three collinear points") {
  auto flat = lower_hull_subdivision(line3(), q({0, 0, 0}));
  CHECK(flat.cells == std::vector<Cell>{{0, 1, 2}});
  auto convex = lower_hull_subdivision(line3(), q({0, -1, 0}));
  CHECK(convex.cells == std::vector<Cell>{{0, 1}, {1, 2}});
  auto concave = lower_hull_subdivision(line3(), q({0, 1, 0}));
  CHECK(concave.cells == std::vector<Cell>{{0, 2}});
  REQUIRE(convex.certificate);
  CHECK(convex.certificate->witnesses.size() == 2);
  CHECK(cells_certified_by(convex, q({0, -1, 0})));
}

TEST_CASE("refinement") {
  auto t = trivial_subdivision(line3());
  auto r = refine(t, q({0, -1, 0}));
  CHECK(r.cells == std::vector<Cell>{{0, 1}, {1, 2}});
  CHECK(r.certificate->levels.size() == 2);
  CHECK(is_refinement(r, t));
  CHECK(!is_refinement(t, r));
}

TEST_CASE("induced subdivisions") {
  PointConfiguration sq({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  HeightFunction constant{{q({1, 1, 1, 1}), q({2, 2, 2, 2})}};
  CHECK(induced_subdivision(sq, constant).cells.size() == 1);
  HeightFunction generic{{q({0, 0, 0, 1})}};
  auto s = induced_subdivision(sq, generic);
  CHECK(s.cells == std::vector<Cell>{{0, 1, 2}, {1, 2, 3}});
  HeightFunction layered{{q({0, 0, 0, 0}), q({0, 0, 0, 0}), q({1, 0, 0, 0})}};
  CHECK(induced_subdivision(sq, layered).cells == oracle::regular_triangulation({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {1, 0, 0, 0}));
}

TEST_CASE("concretized epsilon") {
  auto t = trivial_subdivision(line3());
  HeightFunction constant{{q({0, 0, 0}), q({5, 5, 5})}};
  auto c = concretize_epsilon(t, constant);
  CHECK(c.epsilon == Rational(1, 2));
  CHECK(c.exponent == 1);

  HeightFunction h{{q({0, 0, 0}), q({0, -1, 0})}};
  auto target = induced_subdivision(line3(), h);
  auto d = concretize_epsilon(target, h);
  CHECK(lower_hull_subdivision(line3(), d.heights).cells == std::vector<Cell>{{0, 1}, {1, 2}});

  // Level 1 fights a weaker level 0 preference; small epsilon must win.
  PointConfiguration sq({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  HeightFunction fight{{q({0, 0, 0, 1}), q({-100, 0, 0, 0})}};
  auto target2 = induced_subdivision(sq, fight);
  CHECK(target2.cells == std::vector<Cell>{{0, 1, 2}, {1, 2, 3}});
  auto e = concretize_epsilon(target2, fight);
  CHECK(e.epsilon < Rational(1, 100));
  CHECK(lower_hull_subdivision(sq, e.heights).cells == target2.cells);
}

TEST_CASE("lower hull agrees with the brute-force regular triangulation") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coord(0, 3), height(-20, 20);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::set<IntVector> seen;
    std::vector<IntVector> pts;
    while (pts.size() < d + 4) {
      IntVector p(d);
      for (auto& x : p) x = coord(rng);
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (affine_dimension(pts) != static_cast<int>(d)) continue;
    std::vector<Rational> h;
    std::vector<mpq_class> oh;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      // Heights of the form x^2 + small noise are rarely degenerate.
      Integer sq = 0;
      for (const auto& x : pts[i]) sq += x * x;
      h.emplace_back(Rational(sq * 37 + height(rng)));
      oh.push_back(h.back());
    }
    const auto cells = lower_hull_subdivision(PointConfiguration(pts), h).cells;
    const bool simplicial = std::all_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.size() == d + 1; });
    auto brute = oracle::regular_triangulation(testutil::to_oracle(pts), oh);
    if (simplicial) {
      ++compared;
      CHECK(brute == cells);
    }
  }
  CHECK(compared > 100);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dctri/exact_linalg.hpp"
#include "dctri/lattice_polytope.hpp"
#include "test_util.hpp"

using namespace dctri;
using testutil::apply;
using testutil::random_unimodular;

namespace {

std::vector<std::vector<mpz_class>> rows_of(const std::vector<IntVector>& vs) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
  return out;
}

AffineLattice lattice_through_origin(const std::vector<IntVector>& directions, std::size_t n) {
  std::vector<IntVector> pts{IntVector(n)};
  pts.insert(pts.end(), directions.begin(), directions.end());
  return AffineLattice::affine_hull(pts);
}

// Random integer combinations of the given vectors.
std::vector<IntVector> random_combinations(const std::vector<IntVector>& from, std::size_t count,
                                           std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntVector v(from.front().size());
    for (const auto& f : from) {
      const int a = c(rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += a * f[i];
    }
    out.push_back(v);
  }
  return out;
}

std::vector<IntVector> face(const PointConfiguration& p, const std::vector<int>& w) {
  std::vector<IntVector> out;
  Integer best;
  bool first = true;
  for (const auto& x : p.points()) {
    Integer v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * x[i];
    if (first || v > best) {
      out.clear();
      best = v;
      first = false;
    }
    if (v == best) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("rational subspaces of complementary spaces stay complementary") {
  std::mt19937_64 rng(11);
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const IntegerMatrix a = random_unimodular(n, rng, 16);
    // V and W are spanned by disjoint sets of columns of a unimodular matrix,
    // so V ∩ Z^n and W ∩ Z^n are complementary.
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    const std::size_t dv = 1 + rng() % (n - 1);
    const std::size_t dw = 1 + rng() % (n - dv);
    std::vector<IntVector> v, w;
    for (std::size_t k = 0; k < dv + dw; ++k) {
      IntVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = a(i, cols[k]);
      (k < dv ? v : w).push_back(col);
    }
    REQUIRE(are_complementary(lattice_through_origin(v, n), lattice_through_origin(w, n)));

    const auto x = random_combinations(v, 1 + rng() % dv, rng);
    const auto y = random_combinations(w, 1 + rng() % dw, rng);
    const auto lx = lattice_through_origin(x, n);
    const auto ly = lattice_through_origin(y, n);
    CHECK(are_complementary(lx, ly));
    if (lx.rank() > 0 && ly.rank() > 0) ++nontrivial;

    // Oracle: the stacked saturated bases have full rank and coprime maximal minors.
    auto stacked = lx.basis;
    stacked.insert(stacked.end(), ly.basis.begin(), ly.basis.end());
    if (!stacked.empty()) CHECK(oracle::gcd_maximal_minors(rows_of(stacked)) == 1);
  }
  CHECK(nontrivial >= 1000);
}

TEST_CASE("faces with independent spans have complementary lattices") {
  std::mt19937_64 rng(5);
  std::vector<Matroid> pool;
  for (const auto& [name, m] : testutil::corpus()) pool.push_back(m);
  std::vector<PointConfiguration> polys;
  for (const auto& m : pool) polys.push_back(base_polytope(m));
  std::uniform_int_distribution<int> weight(-2, 2);

  std::size_t tested = 0, positive_dim = 0;
  for (int trial = 0; tested < 1500 && trial < 200000; ++trial) {
    const auto& p = polys[rng() % polys.size()];
    std::vector<std::size_t> same_n;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (polys[i].ambient_dim() == p.ambient_dim()) same_n.push_back(i);
    const auto& q = polys[same_n[rng() % same_n.size()]];
    std::vector<int> wp(p.ambient_dim()), wq(p.ambient_dim());
    for (auto& x : wp) x = weight(rng);
    for (auto& x : wq) x = weight(rng);
    const auto fp = face(p, wp), fq = face(q, wq);
    const auto lp = AffineLattice::affine_hull(fp), lq = AffineLattice::affine_hull(fq);
    if (!independent_affine_spans(lp, lq)) continue;
    ++tested;
    if (lp.rank() > 0 && lq.rank() > 0) ++positive_dim;
    CHECK(are_complementary(lp, lq));
  }
  CHECK(tested >= 1000);
  CHECK(positive_dim >= 100);
}

TEST_CASE("complementarity is invariant under GL_n(Z)") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-2, 2);
  std::size_t agree_true = 0, agree_false = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto random_vectors = [&](std::size_t count) {
      std::vector<IntVector> out(count, IntVector(n));
      for (auto& v : out)
        for (auto& x : v) x = c(rng);
      return out;
    };
    const auto v1 = random_vectors(1 + rng() % 2), v2 = random_vectors(1 + rng() % 2);
    const IntegerMatrix a = random_unimodular(n, rng, 10);
    REQUIRE(abs(determinant(a)) == 1);
    std::vector<IntVector> a1, a2;
    for (const auto& v : v1) a1.push_back(apply(a, v));
    for (const auto& v : v2) a2.push_back(apply(a, v));
    const bool before = are_complementary(lattice_through_origin(v1, n), lattice_through_origin(v2, n));
    const bool after = are_complementary(lattice_through_origin(a1, n), lattice_through_origin(a2, n));
    CHECK(before == after);
    (before ? agree_true : agree_false)++;
  }
  CHECK(agree_true > 100);
  CHECK(agree_false > 100);
}

TEST_CASE("saturation is idempotent and primitive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<IntVector> vs(1 + rng() % n, IntVector(n));
    for (auto& v : vs)
      for (auto& x : v) x = c(rng);
    const auto s = saturate(vs, n);
    CHECK(saturate(s, n) == s);
    CHECK(s.size() == oracle::rank([&] {
            std::vector<std::vector<mpq_class>> m;
            for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
            return m;
          }()));
    if (!s.empty()) CHECK(oracle::gcd_maximal_minors(rows_of(s)) == 1);
  }
}

TEST_CASE("normalized volume is invariant under permutation and translation") {
  std::mt19937_64 rng(9);
  for (const auto& [name, m] : testutil::corpus()) {
    if (m.size() > 5) continue;
    CAPTURE(name);
    const auto p = base_polytope(m);
    const Integer vol = normalized_volume(p);
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IntVector> moved;
    for (const auto& x : p.points()) {
      IntVector y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = x[i] + static_cast<long>(i) - 2;
      moved.push_back(y);
    }
    CHECK(normalized_volume(PointConfiguration(moved)) == vol);
  }
}

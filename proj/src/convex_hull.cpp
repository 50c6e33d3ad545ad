#include "dctri/convex_hull.hpp"

#include <map>

namespace dctri {

bool AffineIndependenceTracker::try_add(const IntVector& p) {
  if (count_ == 0) {
    base_ = p;
    ++count_;
    return true;
  }
  RatVector v(dim_);
  for (std::size_t j = 0; j < dim_; ++j) v[j] = p[j] - base_[j];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivots_[r];
    if (sgn(v[piv]) == 0) continue;
    const Rational f = v[piv];
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
  }
  std::size_t piv = 0;
  while (piv < dim_ && sgn(v[piv]) == 0) ++piv;
  if (piv == dim_) return false;
  const Rational inv = 1 / v[piv];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    if (sgn(row[piv]) == 0) continue;
    const Rational f = row[piv];
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  ++count_;
  return true;
}

std::vector<std::size_t> greedy_affine_basis(std::span<const IntVector> points) {
  std::vector<std::size_t> out;
  if (points.empty()) return out;
  AffineIndependenceTracker tracker(points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (tracker.try_add(points[i])) out.push_back(i);
  return out;
}

int affine_dimension(std::span<const IntVector> points) {
  return static_cast<int>(greedy_affine_basis(points).size()) - 1;
}

namespace {

struct Hyperplane {
  IntVector normal;
  Integer offset;
};

// Hyperplane through D affinely independent points of Z^D, oriented so that
// `interior_sum / interior_count` lies strictly on the negative side.
Hyperplane hyperplane_through(std::span<const IntVector* const> pts, const IntVector& interior_sum,
                              std::size_t interior_count) {
  const std::size_t d = pts.front()->size();
  RationalMatrix diffs(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = (*pts[i])[j] - (*pts[0])[j];
  auto kernel = rational_kernel(diffs);
  if (kernel.size() != 1) throw Error("convex hull: degenerate facet");
  Hyperplane h{primitive(clear_denominators(kernel.front())), 0};
  h.offset = dot(h.normal, *pts[0]);
  const Integer side = dot(h.normal, interior_sum) - h.offset * static_cast<unsigned long>(interior_count);
  if (sgn(side) == 0) throw Error("convex hull: interior point on facet");
  if (sgn(side) > 0) {
    for (auto& x : h.normal) x = -x;
    h.offset = -h.offset;
  }
  return h;
}

using Key = std::pair<IntVector, Integer>;

}  // namespace

std::vector<HullFacet> convex_hull_facets(std::span<const IntVector> points) {
  if (points.empty()) throw Error("convex hull: no points");
  const std::size_t d = points.front().size();
  const std::size_t n = points.size();
  const auto init = greedy_affine_basis(points);
  if (init.size() != d + 1) throw Error("convex hull: points are not full-dimensional");

  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (points[i][0] < points[lo][0]) lo = i;
      if (points[i][0] > points[hi][0]) hi = i;
    }
    HullFacet a{{Integer(-1)}, -points[lo][0], boost::dynamic_bitset<>(n)};
    HullFacet b{{Integer(1)}, points[hi][0], boost::dynamic_bitset<>(n)};
    a.points.set(lo);
    b.points.set(hi);
    return {a, b};
  }

  IntVector interior(d);
  for (auto i : init)
    for (std::size_t j = 0; j < d; ++j) interior[j] += points[i][j];
  const std::size_t interior_count = init.size();

  std::vector<HullFacet> facets;
  std::vector<bool> alive;
  std::map<Key, std::size_t> by_key;

  for (std::size_t omit = 0; omit < init.size(); ++omit) {
    std::vector<const IntVector*> pts;
    HullFacet f{{}, 0, boost::dynamic_bitset<>(n)};
    for (std::size_t k = 0; k < init.size(); ++k) {
      if (k == omit) continue;
      pts.push_back(&points[init[k]]);
      f.points.set(init[k]);
    }
    auto h = hyperplane_through(pts, interior, interior_count);
    f.normal = std::move(h.normal);
    f.offset = std::move(h.offset);
    by_key[{f.normal, f.offset}] = facets.size();
    facets.push_back(std::move(f));
    alive.push_back(true);
  }

  std::vector<bool> in_init(n, false);
  for (auto i : init) in_init[i] = true;

  std::vector<int> side(facets.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (in_init[p]) continue;
    const IntVector& pt = points[p];
    side.assign(facets.size(), 0);
    std::vector<std::size_t> visible, coplanar, hidden;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!alive[f]) continue;
      side[f] = sgn(dot(facets[f].normal, pt) - facets[f].offset);
      if (side[f] > 0) visible.push_back(f);
      else if (side[f] == 0) coplanar.push_back(f);
      else hidden.push_back(f);
    }
    if (visible.empty()) {
      for (auto f : coplanar) facets[f].points.set(p);
      continue;
    }

    std::map<Key, boost::dynamic_bitset<>> created;
    std::vector<std::size_t> non_visible = coplanar;
    non_visible.insert(non_visible.end(), hidden.begin(), hidden.end());
    for (auto fv : visible) {
      for (auto g : non_visible) {
        boost::dynamic_bitset<> ridge = facets[fv].points & facets[g].points;
        if (ridge.count() < d - 1) continue;
        AffineIndependenceTracker tracker(d);
        std::vector<const IntVector*> basis;
        for (auto i = ridge.find_first(); i != boost::dynamic_bitset<>::npos && basis.size() < d - 1;
             i = ridge.find_next(i))
          if (tracker.try_add(points[i])) basis.push_back(&points[i]);
        if (basis.size() != d - 1) continue;
        basis.push_back(&pt);
        auto h = hyperplane_through(basis, interior, interior_count);
        ridge.set(p);
        auto [it, inserted] = created.try_emplace(Key{std::move(h.normal), std::move(h.offset)}, ridge);
        if (!inserted) it->second |= ridge;
      }
    }
    for (auto f : coplanar) facets[f].points.set(p);
    for (auto f : visible) {
      alive[f] = false;
      by_key.erase({facets[f].normal, facets[f].offset});
    }
    for (auto& [key, pts] : created) {
      auto existing = by_key.find(key);
      if (existing != by_key.end()) {
        facets[existing->second].points |= pts;
        continue;
      }
      by_key[key] = facets.size();
      facets.push_back(HullFacet{key.first, key.second, std::move(pts)});
      alive.push_back(true);
    }
  }

  std::vector<HullFacet> out;
  for (std::size_t f = 0; f < facets.size(); ++f)
    if (alive[f]) out.push_back(std::move(facets[f]));
  return out;
}

}  // namespace dctri

#include "dctri/lattice_polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dctri/convex_hull.hpp"

namespace dctri {

PointConfiguration::PointConfiguration(std::vector<IntVector> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("point configuration is empty");
  const std::size_t n = points_.front().size();
  for (const auto& p : points_)
    if (p.size() != n) throw Error("point configuration has inconsistent dimensions");
  std::vector<IntVector> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("point configuration has repeated points");
  span_ = AffineLattice::affine_hull(points_);
  projected_.reserve(points_.size());
  for (const auto& p : points_) projected_.push_back(span_.coordinates(p));
}

PointConfiguration PointConfiguration::subset(std::span<const std::size_t> indices) const {
  std::vector<IntVector> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(points_.at(i));
  return PointConfiguration(std::move(pts));
}

std::size_t PointConfiguration::find(const IntVector& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(it - points_.begin());
}

bool Subdivision::is_triangulation() const {
  const std::size_t d = base.dim();
  return std::all_of(cells.begin(), cells.end(), [d](const Cell& c) { return c.size() == d + 1; });
}

void canonicalize(Subdivision& s) {
  for (auto& c : s.cells) std::sort(c.begin(), c.end());
  std::vector<std::size_t> order(s.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s.cells[a] < s.cells[b]; });
  std::vector<Cell> cells;
  for (auto i : order) cells.push_back(std::move(s.cells[i]));
  s.cells = std::move(cells);
  if (s.certificate && s.certificate->witnesses.size() == order.size()) {
    std::vector<std::vector<AffineFunctional>> w;
    for (auto i : order) w.push_back(std::move(s.certificate->witnesses[i]));
    s.certificate->witnesses = std::move(w);
  }
}

std::vector<std::vector<IntVector>> cells_by_coordinates(const Subdivision& s) {
  std::vector<std::vector<IntVector>> out;
  for (const auto& c : s.cells) {
    std::vector<IntVector> pts;
    for (auto i : c) pts.push_back(s.base[i]);
    std::sort(pts.begin(), pts.end());
    out.push_back(std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointConfiguration base_polytope(const Matroid& m) {
  std::vector<IntVector> pts;
  for (auto b : m.bases()) pts.push_back(indicator(b, m.size()));
  return PointConfiguration(std::move(pts));
}

PointConfiguration independence_polytope_points(const Matroid& m) {
  std::vector<IntVector> pts;
  for (auto s : m.independent_sets()) pts.push_back(indicator(s, m.size()));
  return PointConfiguration(std::move(pts));
}

SpanFlag span_flag(const PointConfiguration& p) {
  const std::size_t n = p.ambient_dim();
  if (n > kMaxGroundSet) throw Error("span_flag: dimension too large");
  const auto& basis = p.span().basis;
  auto constant_on_p = [&](ElementSet s) {
    for (const auto& b : basis) {
      Integer sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1) sum += b[i];
      if (sgn(sum) != 0) return false;
    }
    return true;
  };
  std::vector<ElementSet> valid;
  const ElementSet universe = (ElementSet{1} << n) - 1;
  for (ElementSet s = 1; s <= universe; ++s)
    if (constant_on_p(s)) valid.push_back(s);
  std::vector<ElementSet> blocks;
  for (auto s : valid) {
    bool minimal = std::none_of(valid.begin(), valid.end(),
                                [s](ElementSet t) { return t != s && (t & s) == t; });
    if (minimal) blocks.push_back(s);
  }
  ElementSet covered = 0;
  for (auto b : blocks) {
    if (covered & b) throw Error("span_flag: affine hull is not cut out by a flag of subset sums");
    covered |= b;
  }
  if (covered != universe || blocks.size() != n - p.dim())
    throw Error("span_flag: affine hull is not cut out by a flag of subset sums");
  std::sort(blocks.begin(), blocks.end(), [](ElementSet a, ElementSet b) {
    return (a & -a) < (b & -b);
  });
  SpanFlag flag;
  ElementSet acc = 0;
  for (auto b : blocks) {
    acc |= b;
    flag.chain.push_back(acc);
    Integer v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (acc >> i & 1) v += p[0][i];
    flag.values.push_back(v);
  }
  return flag;
}

bool is_matroid_polytope(const std::vector<IntVector>& points) {
  if (points.empty()) return false;
  for (const auto& p : points)
    for (const auto& x : p)
      if (x != 0 && x != 1) return false;
  std::vector<IntVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const PointConfiguration cfg(pts);

  auto is_root = [](const IntVector& a, const IntVector& b) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Integer d = a[i] - b[i];
      if (d == 1) ++plus;
      else if (d == -1) ++minus;
      else if (d != 0) return false;
    }
    return plus == 1 && minus == 1;
  };

  const std::size_t d = cfg.dim();
  if (d == 0) return true;
  if (d == 1) return is_root(pts[0], pts[1]);

  const auto facets = convex_hull_facets(cfg.projected());
  const std::size_t n = pts.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      boost::dynamic_bitset<> common(n);
      common.set();
      bool any = false;
      for (const auto& f : facets)
        if (f.points.test(u) && f.points.test(v)) {
          common &= f.points;
          any = true;
        }
      if (!any || common.count() != 2) continue;
      if (!is_root(pts[u], pts[v])) return false;
    }
  return true;
}

namespace {

Integer simplex_det(const std::vector<IntVector>& y, std::span<const std::size_t> verts) {
  const std::size_t d = verts.size() - 1;
  IntegerMatrix m(d, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = y[verts[i]][j] - y[verts[0]][j];
  return determinant(m);
}

// Sign of det[f1 - f0, ..., f_{d-1} - f0, q - f0].
int orientation(const std::vector<IntVector>& y, const std::vector<std::size_t>& facet, std::size_t q) {
  std::vector<std::size_t> verts = facet;
  verts.push_back(q);
  return sgn(simplex_det(y, verts));
}

}  // namespace

Integer simplex_volume(const PointConfiguration& p, const Cell& cell) {
  if (cell.size() != p.dim() + 1) throw Error("simplex_volume: cell is not a simplex of full dimension");
  if (p.dim() == 0) return 1;
  return abs(simplex_det(p.projected(), cell));
}

Integer normalized_volume(const PointConfiguration& p) {
  const std::size_t d = p.dim();
  if (d == 0) return 1;
  const auto& y = p.projected();
  const auto init = greedy_affine_basis(y);
  Integer volume = abs(simplex_det(y, init));

  // Boundary facets of the current triangulation, with the opposite vertex of
  // the unique simplex containing each.
  std::map<std::vector<std::size_t>, std::size_t> boundary;
  for (std::size_t k = 0; k < init.size(); ++k) {
    std::vector<std::size_t> f;
    for (std::size_t j = 0; j < init.size(); ++j)
      if (j != k) f.push_back(init[j]);
    std::sort(f.begin(), f.end());
    boundary[f] = init[k];
  }
  std::vector<bool> placed(p.size(), false);
  for (auto i : init) placed[i] = true;

  for (std::size_t q = 0; q < p.size(); ++q) {
    if (placed[q]) continue;
    placed[q] = true;
    std::vector<std::vector<std::size_t>> visible;
    for (const auto& [facet, opposite] : boundary) {
      const int sq = orientation(y, facet, q);
      if (sq != 0 && sq == -orientation(y, facet, opposite)) visible.push_back(facet);
    }
    for (const auto& f : visible) {
      std::vector<std::size_t> simplex = f;
      simplex.push_back(q);
      volume += abs(simplex_det(y, simplex));
      boundary.erase(f);
    }
    for (const auto& f : visible)
      for (std::size_t k = 0; k < f.size(); ++k) {
        std::vector<std::size_t> g;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != k) g.push_back(f[j]);
        g.push_back(q);
        std::sort(g.begin(), g.end());
        auto it = boundary.find(g);
        if (it != boundary.end()) boundary.erase(it);
        else boundary[g] = f[k];
      }
  }
  return volume;
}

Triangulation restrict_to_face(const Triangulation& t, const PointConfiguration& face) {
  std::vector<std::size_t> to_face(t.base.size(), face.size());
  for (std::size_t i = 0; i < face.size(); ++i) {
    const std::size_t j = t.base.find(face[i]);
    if (j == t.base.size()) throw Error("restrict_to_face: face point not in triangulation");
    to_face[j] = i;
  }
  const std::size_t dim = face.dim();
  std::set<Cell> cells;
  for (const auto& c : t.cells) {
    Cell r;
    for (auto i : c)
      if (to_face[i] < face.size()) r.push_back(to_face[i]);
    if (r.size() != dim + 1) continue;
    std::sort(r.begin(), r.end());
    cells.insert(std::move(r));
  }
  Triangulation out{face, {cells.begin(), cells.end()}, std::nullopt};
  Integer total = 0;
  for (const auto& c : out.cells) {
    const Integer v = simplex_volume(face, c);
    if (v == 0) throw Error("restrict_to_face: degenerate face simplex");
    total += v;
  }
  if (total != normalized_volume(face))
    throw Error("restrict_to_face: face is not a union of faces of the triangulation");
  return out;
}

}  // namespace dctri

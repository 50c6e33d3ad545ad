#include "dctri/regular_subdivision.hpp"

#include <algorithm>

#include "dctri/convex_hull.hpp"
#include "dctri/lattice_polytope.hpp"

namespace dctri {

std::vector<Rational> HeightFunction::flatten(const Rational& eps) const {
  if (levels.empty()) return {};
  std::vector<Rational> out(levels.front().size());
  Rational scale = 1;
  for (const auto& level : levels) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * level[i];
    scale *= eps;
  }
  return out;
}

Subdivision trivial_subdivision(const PointConfiguration& p) {
  Cell all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  RegularityCertificate cert;
  cert.levels.push_back(std::vector<Rational>(p.size()));
  cert.witnesses.push_back({AffineFunctional{0, RatVector(p.ambient_dim())}});
  return Subdivision{p, {all}, std::move(cert)};
}

namespace {

std::vector<IntVector> cell_points(const PointConfiguration& p, const Cell& c) {
  std::vector<IntVector> pts;
  pts.reserve(c.size());
  for (auto i : c) pts.push_back(p[i]);
  return pts;
}

std::vector<Rational> cell_values(std::span<const Rational> values, const Cell& c) {
  std::vector<Rational> out;
  out.reserve(c.size());
  for (auto i : c) out.push_back(values[i]);
  return out;
}

}  // namespace

Subdivision lower_hull_subdivision(const PointConfiguration& p, std::span<const Rational> heights) {
  if (heights.size() != p.size()) throw Error("lower_hull_subdivision: one height per point required");
  RegularityCertificate cert;
  cert.levels.emplace_back(heights.begin(), heights.end());

  if (auto w = interpolate_affine(p.points(), heights)) {
    Subdivision s = trivial_subdivision(p);
    cert.witnesses.push_back({*w});
    s.certificate = std::move(cert);
    return s;
  }

  const std::size_t d = p.dim();
  const IntVector z = clear_denominators(heights);
  std::vector<IntVector> lifted;
  lifted.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    IntVector q = p.projected()[i];
    q.push_back(z[i]);
    lifted.push_back(std::move(q));
  }
  Subdivision s{p, {}, std::nullopt};
  for (const auto& f : convex_hull_facets(lifted)) {
    if (sgn(f.normal[d]) >= 0) continue;
    Cell c;
    for (auto i = f.points.find_first(); i != boost::dynamic_bitset<>::npos; i = f.points.find_next(i))
      c.push_back(i);
    auto w = interpolate_affine(cell_points(p, c), cell_values(heights, c));
    if (!w) throw Error("lower_hull_subdivision: lower facet without affine witness");
    s.cells.push_back(std::move(c));
    cert.witnesses.push_back({std::move(*w)});
  }
  s.certificate = std::move(cert);
  canonicalize(s);
  return s;
}

Subdivision refine(const Subdivision& s, std::span<const Rational> heights) {
  if (heights.size() != s.base.size()) throw Error("refine: one height per point required");
  if (!s.certificate) throw Error("refine: subdivision has no height certificate");
  RegularityCertificate cert;
  cert.levels = s.certificate->levels;
  cert.levels.emplace_back(heights.begin(), heights.end());
  Subdivision out{s.base, {}, std::nullopt};
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const Cell& parent = s.cells[c];
    const Subdivision sub = lower_hull_subdivision(s.base.subset(parent), cell_values(heights, parent));
    for (std::size_t k = 0; k < sub.cells.size(); ++k) {
      Cell mapped;
      for (auto i : sub.cells[k]) mapped.push_back(parent[i]);
      out.cells.push_back(std::move(mapped));
      std::vector<AffineFunctional> w;
      if (c < s.certificate->witnesses.size()) w = s.certificate->witnesses[c];
      w.push_back(sub.certificate->witnesses[k].back());
      cert.witnesses.push_back(std::move(w));
    }
  }
  out.certificate = std::move(cert);
  canonicalize(out);
  return out;
}

Subdivision induced_subdivision(const PointConfiguration& p, const HeightFunction& h) {
  if (h.levels.empty()) return trivial_subdivision(p);
  Subdivision s = lower_hull_subdivision(p, h.levels.front());
  for (std::size_t k = 1; k < h.levels.size(); ++k) s = refine(s, h.levels[k]);
  return s;
}

bool is_refinement(const Subdivision& fine, const Subdivision& coarse) {
  for (const auto& c : fine.cells) {
    bool inside = std::any_of(coarse.cells.begin(), coarse.cells.end(), [&](const Cell& big) {
      return std::includes(big.begin(), big.end(), c.begin(), c.end());
    });
    if (!inside) return false;
  }
  return true;
}

bool cells_certified_by(const Subdivision& s, std::span<const Rational> heights) {
  std::vector<bool> in_cell(s.base.size());
  for (const auto& c : s.cells) {
    auto w = interpolate_affine(cell_points(s.base, c), cell_values(heights, c));
    if (!w) return false;
    std::fill(in_cell.begin(), in_cell.end(), false);
    for (auto i : c) in_cell[i] = true;
    for (std::size_t i = 0; i < s.base.size(); ++i)
      if (!in_cell[i] && !((*w)(s.base[i]) < heights[i])) return false;
  }
  return true;
}

ConcreteHeights concretize_epsilon(const Subdivision& target, const HeightFunction& h,
                                   unsigned max_exponent) {
  Rational eps(1, 2);
  for (unsigned m = 1; m <= max_exponent; ++m, eps /= 2) {
    auto flat = h.flatten(eps);
    if (!cells_certified_by(target, flat)) continue;
    Subdivision check = lower_hull_subdivision(target.base, flat);
    if (check.cells != target.cells)
      throw Error("concretize_epsilon: target cells are lower facets but do not cover the polytope");
    return ConcreteHeights{eps, m, std::move(flat)};
  }
  throw Error("concretize_epsilon: no epsilon found within the iteration cap");
}

}  // namespace dctri

#include "dctri/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dctri/convex_hull.hpp"
#include "dctri/exact_lp.hpp"
#include "dctri/lattice_polytope.hpp"

namespace dctri {

const char* to_string(RegularityStatus s) {
  switch (s) {
    case RegularityStatus::Certified: return "certified";
    case RegularityStatus::Failed: return "failed";
    case RegularityStatus::Unverifiable: return "unverifiable";
  }
  return "?";
}

const char* to_string(FlagStatus s) {
  switch (s) {
    case FlagStatus::Flag: return "flag";
    case FlagStatus::NotFlag: return "not_flag";
    case FlagStatus::NotComputed: return "not_computed";
  }
  return "?";
}

bool is_unimodular(std::span<const IntVector> vertices) {
  if (vertices.empty()) throw Error("is_unimodular: empty simplex");
  if (vertices.size() == 1) return true;
  const std::size_t n = vertices.front().size();
  IntegerMatrix edges(vertices.size() - 1, n);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) edges(i - 1, j) = vertices[i][j] - vertices[0][j];
  const auto d = smith_diagonal(edges);
  if (d.size() != vertices.size() - 1) throw Error("is_unimodular: vertices are affinely dependent");
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

namespace {

std::string show(const Cell& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

// Looks for (a, b) with a.y = b on shared points, a.y <= b - 1 on the rest of
// `c1` and a.y >= b + 1 on the rest of `c2`. Such a hyperplane exists iff
// the cells meet in the common face spanned by their shared points.
bool meet_face_to_face(const std::vector<IntVector>& y, const Cell& c1, const Cell& c2) {
  const std::size_t d = y.front().size();
  std::vector<std::size_t> shared, only1, only2;
  std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared));
  std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(only1));
  std::set_difference(c2.begin(), c2.end(), c1.begin(), c1.end(), std::back_inserter(only2));
  if (only1.empty() || only2.empty()) return false;
  std::vector<LinearConstraint> cons;
  auto row = [&](std::size_t i, Relation rel, int rhs) {
    LinearConstraint c;
    c.coefficients.assign(y[i].begin(), y[i].end());
    c.coefficients.push_back(-1);
    c.relation = rel;
    c.rhs = rhs;
    cons.push_back(std::move(c));
  };
  for (auto i : shared) row(i, Relation::Equal, 0);
  for (auto i : only1) row(i, Relation::LessEqual, -1);
  for (auto i : only2) row(i, Relation::GreaterEqual, 1);
  return find_feasible_point(d + 1, cons).has_value();
}

std::vector<IntVector> points_of(const PointConfiguration& p, const Cell& c) {
  std::vector<IntVector> pts;
  for (auto i : c) pts.push_back(p[i]);
  return pts;
}

}  // namespace

SubdivisionCheck check_subdivision(const Subdivision& s, bool certified_disjoint) {
  SubdivisionCheck out;
  const auto& base = s.base;
  const std::size_t dim = base.dim();

  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    Cell c = s.cells[ci];
    std::sort(c.begin(), c.end());
    if (c.empty() || c.back() >= base.size()) {
      out.well_formed = false;
      out.failures.push_back({"well_formed", "cell " + show(s.cells[ci]) + " has an index out of range", {ci}, {}});
      continue;
    }
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      out.well_formed = false;
      out.failures.push_back({"well_formed", "cell " + show(s.cells[ci]) + " repeats a vertex", {ci}, {}});
      continue;
    }
    std::vector<IntVector> y;
    for (auto i : c) y.push_back(base.projected()[i]);
    if (affine_dimension(y) != static_cast<int>(dim)) {
      out.well_formed = false;
      out.failures.push_back({"well_formed", "cell " + show(s.cells[ci]) + " is not full-dimensional", {ci}, {}});
    }
  }
  out.oracle_volume = normalized_volume(base);
  if (!out.well_formed) return out;

  std::vector<Cell> cells = s.cells;
  for (auto& c : cells) std::sort(c.begin(), c.end());

  out.volume = 0;
  for (const auto& c : cells)
    out.volume += c.size() == dim + 1 ? simplex_volume(base, c) : normalized_volume(base.subset(c));

  out.face_to_face = true;
  const auto& y = base.projected();
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (dim == 0 || !meet_face_to_face(y, cells[i], cells[j])) {
        out.face_to_face = false;
        out.failures.push_back({"face_to_face",
                                "cells " + show(cells[i]) + " and " + show(cells[j]) +
                                    " do not meet in a common face",
                                {i, j},
                                {}});
      }
    }

  // Separating hyperplanes for every pair already give disjoint interiors.
  const bool disjoint = certified_disjoint || out.face_to_face;
  out.disjointness_from_certificate = certified_disjoint;
  if (out.volume != out.oracle_volume)
    out.failures.push_back({"covers",
                            "cell volumes sum to " + out.volume.get_str() + ", polytope volume is " +
                                out.oracle_volume.get_str(),
                            {},
                            {}});
  out.covers = disjoint && out.volume == out.oracle_volume;
  return out;
}

RegularityCheck check_regularity(const Subdivision& s) {
  RegularityCheck out;
  if (!s.certificate || s.certificate->levels.empty()) {
    out.failures.push_back({"regularity", "no certificate", {}, {}});
    return out;
  }
  const auto& cert = *s.certificate;
  const std::size_t n = s.base.size();
  for (const auto& level : cert.levels)
    if (level.size() != n) {
      out.status = RegularityStatus::Failed;
      out.failures.push_back({"regularity", "certificate level has the wrong length", {}, {}});
      return out;
    }
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci)
    for (auto i : s.cells[ci])
      if (i >= n) {
        out.status = RegularityStatus::Failed;
        out.failures.push_back({"regularity", "cell index out of range", {ci}, {}});
        return out;
      }
  const bool have_witnesses = cert.witnesses.size() == s.cells.size();

  out.lexicographic = true;
  for (std::size_t ci = 0; ci < s.cells.size() && out.lexicographic; ++ci) {
    const Cell& c = s.cells[ci];
    const auto pts = points_of(s.base, c);
    std::vector<bool> in_cell(n, false);
    for (auto i : c) in_cell.at(i) = true;

    std::vector<AffineFunctional> w;
    for (std::size_t k = 0; k < cert.levels.size(); ++k) {
      std::vector<Rational> vals;
      for (auto i : c) vals.push_back(cert.levels[k][i]);
      if (have_witnesses && cert.witnesses[ci].size() == cert.levels.size()) {
        w.push_back(cert.witnesses[ci][k]);
        for (std::size_t j = 0; j < c.size(); ++j)
          if (w.back()(std::span<const Integer>(pts[j])) != vals[j]) {
            out.lexicographic = false;
            out.failures.push_back({"regularity", "witness differs from the heights on its cell", {ci}, {c[j]}});
          }
      } else if (auto f = interpolate_affine(pts, vals)) {
        w.push_back(std::move(*f));
      } else {
        out.lexicographic = false;
        out.failures.push_back({"regularity", "heights are not affine on the cell", {ci}, {}});
      }
      if (!out.lexicographic) break;
    }
    if (!out.lexicographic) break;

    for (std::size_t p = 0; p < n; ++p) {
      if (in_cell[p]) continue;
      int sign = 0;
      for (std::size_t k = 0; k < w.size() && sign == 0; ++k)
        sign = sgn(cert.levels[k][p] - w[k](std::span<const Integer>(s.base[p])));
      if (sign <= 0) {
        out.lexicographic = false;
        out.failures.push_back({"regularity", "a point off the cell is not lexicographically above its witness",
                                {ci}, {p}});
        break;
      }
    }
  }

  if (cert.epsilon) {
    bool ok = cert.flat_heights.size() == n && sgn(*cert.epsilon) > 0;
    if (ok) {
      std::vector<Rational> expected(n);
      Rational scale = 1;
      for (const auto& level : cert.levels) {
        for (std::size_t i = 0; i < n; ++i) expected[i] += scale * level[i];
        scale *= *cert.epsilon;
      }
      ok = expected == cert.flat_heights;
      if (!ok) out.failures.push_back({"regularity", "concretized heights differ from the flattened levels", {}, {}});
    }
    for (std::size_t ci = 0; ci < s.cells.size() && ok; ++ci) {
      const Cell& c = s.cells[ci];
      std::vector<Rational> vals;
      for (auto i : c) vals.push_back(cert.flat_heights[i]);
      auto f = interpolate_affine(points_of(s.base, c), vals);
      if (!f) {
        ok = false;
        out.failures.push_back({"regularity", "concretized heights are not affine on the cell", {ci}, {}});
        break;
      }
      std::vector<bool> in_cell(n, false);
      for (auto i : c) in_cell[i] = true;
      for (std::size_t p = 0; p < n && ok; ++p)
        if (!in_cell[p] && cert.flat_heights[p] <= (*f)(std::span<const Integer>(s.base[p]))) {
          ok = false;
          out.failures.push_back({"regularity", "concretized heights do not lift the cell strictly", {ci}, {p}});
        }
    }
    out.numeric = ok;
  }
  out.status = out.lexicographic && out.numeric.value_or(true) ? RegularityStatus::Certified
                                                               : RegularityStatus::Failed;
  return out;
}

namespace {

std::vector<std::set<Cell>> faces_by_size(std::span<const Cell> cells) {
  std::size_t top = 0;
  for (const auto& c : cells) top = std::max(top, c.size());
  if (top > 24) throw Error("face enumeration: cells too large");
  std::vector<std::set<Cell>> faces(top + 1);
  for (Cell c : cells) {
    std::sort(c.begin(), c.end());
    const std::size_t k = c.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      Cell f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) f.push_back(c[i]);
      faces[f.size()].insert(std::move(f));
    }
  }
  return faces;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::vector<Integer> f_vector(std::span<const Cell> cells, std::size_t dim) {
  const auto faces = faces_by_size(cells);
  std::vector<Integer> f(dim + 2);
  for (std::size_t k = 0; k < faces.size() && k < f.size(); ++k)
    f[k] = static_cast<unsigned long>(faces[k].size());
  if (cells.empty()) f[0] = 0;
  return f;
}

std::vector<Integer> f_vector(const Triangulation& t) { return f_vector(t.cells, t.base.dim()); }

std::vector<Integer> h_vector(std::span<const Cell> cells, std::size_t dim) {
  const auto f = f_vector(cells, dim);  // f[i] = f_{i-1}
  const std::size_t d = dim + 1;
  std::vector<Integer> h(d + 1);
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      const Integer term = binomial(d - i, k - i) * f[i];
      if ((k - i) % 2) h[k] -= term;
      else h[k] += term;
    }
  if (h.back() == 0) h.pop_back();
  return h;
}

std::vector<Integer> h_vector(const Triangulation& t) { return h_vector(t.cells, t.base.dim()); }

FlagResult flagness(std::span<const Cell> facets, std::size_t vertex_budget) {
  std::set<std::size_t> vertices;
  for (const auto& c : facets) vertices.insert(c.begin(), c.end());
  if (vertices.size() > vertex_budget) return {FlagStatus::NotComputed, {}};

  const auto faces = faces_by_size(facets);
  std::map<std::size_t, std::set<std::size_t>> adjacent;
  if (faces.size() > 2)
    for (const auto& e : faces[2]) {
      adjacent[e[0]].insert(e[1]);
      adjacent[e[1]].insert(e[0]);
    }
  auto is_face = [&](const Cell& c) { return c.size() < faces.size() && faces[c.size()].count(c) > 0; };

  // A clique of the 1-skeleton that is not a face, all of whose facets are
  // faces, is a minimal non-face of size >= 3.
  for (std::size_t k = 3; k <= faces.size(); ++k)
    for (const auto& sigma : faces[k - 1]) {
      const auto& first = adjacent[sigma.front()];
      for (std::size_t v : first) {
        if (v <= sigma.back()) continue;
        if (!std::all_of(sigma.begin(), sigma.end(), [&](std::size_t u) { return adjacent[u].count(v) > 0; }))
          continue;
        Cell cand = sigma;
        cand.push_back(v);
        if (is_face(cand)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
          Cell sub;
          for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != drop) sub.push_back(cand[j]);
          minimal = is_face(sub);
        }
        if (minimal) return {FlagStatus::NotFlag, cand};
      }
    }
  return {FlagStatus::Flag, {}};
}

FlagResult flagness(const Triangulation& t, std::size_t vertex_budget) { return flagness(t.cells, vertex_budget); }

bool VerificationReport::passed(bool allow_uncertified) const {
  const bool regular = regular_certified == RegularityStatus::Certified ||
                       (allow_uncertified && regular_certified == RegularityStatus::Unverifiable);
  return unimodular_all && face_to_face && covers && regular;
}

VerificationReport verify(const Subdivision& s, const VerifyOptions& options) {
  VerificationReport r;
  r.cells = s.cells.size();

  const RegularityCheck reg = check_regularity(s);
  r.regular_certified = reg.status;
  r.regular_lexicographic = reg.lexicographic;
  r.regular_numeric = reg.numeric;
  if (reg.status == RegularityStatus::Failed) r.failures.insert(r.failures.end(), reg.failures.begin(), reg.failures.end());

  const SubdivisionCheck sub = check_subdivision(s, reg.status == RegularityStatus::Certified);
  r.face_to_face = sub.face_to_face;
  r.covers = sub.covers;
  r.volume = sub.volume;
  r.oracle_volume = sub.oracle_volume;
  r.failures.insert(r.failures.end(), sub.failures.begin(), sub.failures.end());
  if (!sub.well_formed) return r;

  r.unimodular_all = true;
  const std::size_t dim = s.base.dim();
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    const Cell& c = s.cells[ci];
    if (c.size() != dim + 1) {
      r.unimodular_all = false;
      r.failures.push_back({"unimodular", "cell " + show(c) + " is not a simplex", {ci}, {}});
    } else if (!is_unimodular(points_of(s.base, c))) {
      r.unimodular_all = false;
      r.failures.push_back({"unimodular", "cell " + show(c) + " has lattice volume above 1", {ci}, {}});
    }
  }
  if (s.is_triangulation()) {
    r.f_vector = f_vector(s);
    r.h_vector = h_vector(s);
    if (options.compute_flag) r.flag = flagness(s, options.flag_budget);
  }
  return r;
}

}  // namespace dctri

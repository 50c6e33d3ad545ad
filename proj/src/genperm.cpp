#include "dctri/genperm.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "dctri/lattice_polytope.hpp"
#include "dctri/regular_subdivision.hpp"

namespace dctri {

std::optional<SubmodularityWitness> find_submodularity_violation(std::size_t n,
                                                                 std::span<const Integer> table) {
  const ElementSet count = ElementSet{1} << n;
  for (ElementSet s = 0; s < count; ++s)
    for (std::size_t i = 0; i < n; ++i) {
      const ElementSet bi = ElementSet{1} << i;
      if (s & bi) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const ElementSet bj = ElementSet{1} << j;
        if (s & bj) continue;
        if (table[s | bi] + table[s | bj] < table[s | bi | bj] + table[s]) return SubmodularityWitness{s | bi, s | bj};
      }
    }
  return std::nullopt;
}

SubmodularFunction SubmodularFunction::from_table(std::size_t n, std::vector<Integer> table) {
  if (n == 0 || n > kMaxSubmodularSize) throw Error("submodular function: n must be in 1..12");
  if (table.size() != (std::size_t{1} << n)) throw Error("submodular function: table must have 2^n entries");
  if (table[0] != 0) throw Error("submodular function: f(empty) must be 0");
  if (auto w = find_submodularity_violation(n, table)) {
    auto show = [](ElementSet s) {
      std::string out = "{";
      for (int e : list_from_set(s)) out += (out.size() > 1 ? "," : "") + std::to_string(e);
      return out + "}";
    };
    throw Error("submodular function violated by S=" + show(w->s) + ", T=" + show(w->t));
  }
  return SubmodularFunction(n, std::move(table));
}

SubmodularFunction SubmodularFunction::matroid_rank(const Matroid& m) {
  std::vector<Integer> table(std::size_t{1} << m.size());
  for (ElementSet s = 0; s < table.size(); ++s) table[s] = static_cast<unsigned long>(m.rank(s));
  return from_table(m.size(), std::move(table));
}

bool SubmodularFunction::is_monotone() const {
  for (ElementSet s = 0; s < table_.size(); ++s)
    for (std::size_t i = 0; i < n_; ++i)
      if (!(s >> i & 1) && table_[s | ElementSet{1} << i] < table_[s]) return false;
  return true;
}

PointConfiguration vertices_from_submodular(const SubmodularFunction& f) {
  const std::size_t n = f.size();
  const ElementSet full = (ElementSet{1} << n) - 1;
  // partial[S]: greedy vectors of orderings that start with S, restricted to S.
  std::vector<std::set<IntVector>> partial(full + 1);
  partial[0].insert(IntVector(n));
  std::vector<ElementSet> order(full + 1);
  for (ElementSet s = 0; s <= full; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](ElementSet a, ElementSet b) { return std::popcount(a) < std::popcount(b); });
  for (ElementSet s : order) {
    for (std::size_t i = 0; i < n; ++i) {
      const ElementSet bi = ElementSet{1} << i;
      if (s & bi) continue;
      const Integer inc = f(s | bi) - f(s);
      for (IntVector v : partial[s]) {
        v[i] = inc;
        partial[s | bi].insert(std::move(v));
      }
    }
    if (s != full) partial[s].clear();
  }
  return PointConfiguration({partial[full].begin(), partial[full].end()});
}

PointConfiguration lattice_points(const SubmodularFunction& f) {
  const std::size_t n = f.size();
  const ElementSet full = (ElementSet{1} << n) - 1;
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ElementSet bi = ElementSet{1} << i;
    lo[i] = f(full) - f(full & ~bi);
    hi[i] = f(bi);
  }
  std::vector<IntVector> out;
  IntVector x(n);
  // After fixing x_0..x_k, every S inside that prefix and containing k must
  // satisfy f([n]) - f([n] \ S) <= x(S) <= f(S).
  auto feasible = [&](std::size_t k) {
    const ElementSet bk = ElementSet{1} << k;
    const ElementSet rest = bk - 1;
    for (ElementSet t = rest;; t = (t - 1) & rest) {
      const ElementSet s = t | bk;
      Integer sum = 0;
      for (std::size_t i = 0; i <= k; ++i)
        if (s >> i & 1) sum += x[i];
      if (sum > f(s) || sum < f(full) - f(full & ~s)) return false;
      if (t == 0) break;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(x);
      return;
    }
    for (x[k] = lo[k]; x[k] <= hi[k]; ++x[k])
      if (feasible(k)) self(self, k + 1);
  };
  recurse(recurse, 0);
  if (out.empty()) throw Error("lattice_points: polytope is empty");
  return PointConfiguration(std::move(out));
}

IntVector nonnegative_shift(const PointConfiguration& p) {
  IntVector shift(p.ambient_dim());
  for (std::size_t k = 0; k < shift.size(); ++k) {
    Integer m = p[0][k];
    for (const auto& x : p.points()) m = std::min(m, x[k]);
    if (m < 0) shift[k] = -m;
  }
  return shift;
}

Subdivision dice(const PointConfiguration& p) {
  std::vector<Rational> g;
  g.reserve(p.size());
  for (const auto& x : p.points()) {
    Integer sq = 0;
    for (const auto& c : x) sq += c * c;
    g.push_back(sq);
  }
  Subdivision s = lower_hull_subdivision(p, g);
  for (const auto& c : s.cells) {
    std::vector<IntVector> pts;
    for (auto i : c) pts.push_back(p[i]);
    IntVector lo = pts.front();
    for (const auto& q : pts)
      for (std::size_t k = 0; k < lo.size(); ++k) lo[k] = std::min(lo[k], q[k]);
    for (auto& q : pts) q = subtract(q, lo);
    if (!is_matroid_polytope(pts)) throw Error("dice: a cell is not a translated matroid base polytope");
  }
  canonicalize(s);
  return s;
}

namespace {

// Triangulates `work` (all lattice points of a generalized permutahedron in a
// nonnegative box) and reports the cells over `base`, which is indexed the
// same way.
TriangulationRun triangulate_points(const PointConfiguration& base, const PointConfiguration& work,
                                    const GenpermOptions& options) {
  TriangulationRun run;
  run.seed = options.seed;
  const Subdivision diced = dice(work);
  Integer t = options.t_start.value_or(
      Integer(static_cast<unsigned long>(work.ambient_dim() * work.size() + 2)));

  std::vector<Rational> g;
  for (const auto& x : work.points()) {
    Integer sq = 0;
    for (const auto& c : x) sq += c * c;
    g.push_back(sq);
  }

  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt, t += 1) {
    run.t_sequence.push_back(t);
    const FunctionalSchedule schedule(options.seed, t);
    std::set<std::size_t> splits;
    try {
      std::set<Cell> cells;
      for (const auto& cell : diced.cells)
        for (auto& c : triangulate_unit_cell(work, cell, schedule, &splits)) cells.insert(std::move(c));
      run.triangulation = Triangulation{base, {cells.begin(), cells.end()}, std::nullopt};
      canonicalize(run.triangulation);
      for (auto k : splits) run.split_order.push_back(k + 1);
      HeightFunction h;
      h.levels.push_back(g);
      for (auto& level : schedule_levels(work, schedule)) h.levels.push_back(std::move(level));
      attach_certificate(run.triangulation, h, options.concretize);
      return run;
    } catch (const GenericityFailure&) {
    }
  }
  throw RetryCapExceeded("no generic schedule found within the retry cap");
}

PointConfiguration shifted(const PointConfiguration& p, const IntVector& shift) {
  std::vector<IntVector> pts;
  for (const auto& x : p.points()) {
    IntVector y = x;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += shift[k];
    pts.push_back(std::move(y));
  }
  return PointConfiguration(std::move(pts));
}

}  // namespace

TriangulationRun triangulate_genperm(const PointConfiguration& p, const GenpermOptions& options) {
  return triangulate_points(p, shifted(p, nonnegative_shift(p)), options);
}

TriangulationRun triangulate_genperm(const SubmodularFunction& f, const GenpermOptions& options) {
  return triangulate_genperm(lattice_points(f), options);
}

IntVector IndependenceLift::lift(const IntVector& v) const {
  IntVector w{r};
  for (const auto& c : v) {
    w.front() -= c;
    w.push_back(c);
  }
  return w;
}

IntVector IndependenceLift::drop(const IntVector& w) const { return IntVector(w.begin() + 1, w.end()); }

IntegerMatrix IndependenceLift::linear_part() const {
  const std::size_t n = preimage.ambient_dim();
  IntegerMatrix a(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    a(0, j) = -1;
    a(j + 1, j) = 1;
  }
  return a;
}

IndependenceLift lift_polymatroid(const SubmodularFunction& f) {
  if (!f.is_monotone()) throw Error("independence lift requires a monotone function");
  const std::size_t n = f.size();
  if (n + 1 > kMaxSubmodularSize) throw Error("independence lift: n too large");
  const Integer r = f((ElementSet{1} << n) - 1);
  // Element 0 is the new coordinate; it is tight only through x([n+1]) = r.
  std::vector<Integer> table(std::size_t{1} << (n + 1));
  for (ElementSet s = 1; s < table.size(); ++s) table[s] = (s & 1) ? r : f(s >> 1);
  const PointConfiguration image = lattice_points(SubmodularFunction::from_table(n + 1, std::move(table)));
  std::vector<IntVector> pre;
  for (const auto& w : image.points()) pre.emplace_back(w.begin() + 1, w.end());
  return IndependenceLift{image, PointConfiguration(std::move(pre)), r};
}

IndependenceLift lift_independence(const Matroid& m) {
  return lift_polymatroid(SubmodularFunction::matroid_rank(m));
}

TriangulationRun triangulate_independence_polytope(const SubmodularFunction& f, const GenpermOptions& options) {
  const IndependenceLift lift = lift_polymatroid(f);
  return triangulate_points(lift.preimage, shifted(lift.image, nonnegative_shift(lift.image)), options);
}

TriangulationRun triangulate_independence_polytope(const Matroid& m, const GenpermOptions& options) {
  return triangulate_independence_polytope(SubmodularFunction::matroid_rank(m), options);
}

}  // namespace dctri

#include "dctri/dc_triangulator.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "dctri/lattice_polytope.hpp"

namespace dctri {

Rational GenericFunctional::operator()(std::span<const Integer> y) const {
  if (y.size() != coefficients.size()) throw Error("functional applied to vector of wrong length");
  Rational v = constant;
  for (std::size_t i = 0; i < y.size(); ++i) v += coefficients[i] * y[i];
  return v;
}

GenericFunctional make_generic_functional(std::size_t m, const Integer& t) {
  GenericFunctional l{0, RatVector(m)};
  Integer power = 1;
  for (std::size_t i = 0; i < m; ++i) {
    power *= t;
    l.coefficients[i] = power;
  }
  return l;
}

bool is_generic_bruteforce(const GenericFunctional& l, std::size_t max_dim) {
  const std::size_t m = l.dim();
  if (m > max_dim) throw Error("is_generic_bruteforce: dimension above cap");
  if (m == 0) return true;

  // A flat is represented by the row space of the normals e_S cutting it out,
  // stored in reduced row echelon form so equal flats share a key.
  auto canonical = [m](std::vector<RatVector> rows) {
    if (rows.empty()) return rows;
    RationalMatrix a = RationalMatrix::from_rows(rows, m);
    const auto piv = reduce_to_rref(a);
    rows.clear();
    for (std::size_t i = 0; i < piv.size(); ++i) rows.push_back(a.row(i));
    return rows;
  };
  std::vector<RatVector> normals;
  for (ElementSet s = 1; s < (ElementSet{1} << m); ++s) {
    RatVector e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = (s >> i) & 1;
    normals.push_back(std::move(e));
  }

  std::set<std::vector<RatVector>> seen;
  std::vector<std::vector<RatVector>> frontier{{}};
  seen.insert({});
  while (!frontier.empty()) {
    std::vector<std::vector<RatVector>> next;
    for (const auto& flat : frontier) {
      // Constant on the flat <=> linear part lies in the normal space.
      std::vector<RatVector> with_l = flat;
      with_l.push_back(l.coefficients);
      if (rank(RationalMatrix::from_rows(with_l, m)) == flat.size()) return false;
      for (const auto& e : normals) {
        std::vector<RatVector> rows = flat;
        rows.push_back(e);
        rows = canonical(std::move(rows));
        if (rows.size() == flat.size() || rows.size() == m) continue;  // same flat or the origin
        if (seen.insert(rows).second) next.push_back(std::move(rows));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

FunctionalSchedule::FunctionalSchedule(std::uint64_t seed, Integer t) : seed_(seed), t_(std::move(t)) {
  if (t_ < 2) throw Error("functional schedule requires t >= 2");
}

std::uint64_t FunctionalSchedule::key(std::span<const int> prefix) const {
  std::uint64_t h = splitmix(seed_);
  for (int v : prefix) h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + 0x100));
  return splitmix(h ^ prefix.size());
}

GenericFunctional FunctionalSchedule::step(std::span<const int> prefix, std::size_t dim) const {
  const std::uint64_t h = key(prefix);
  GenericFunctional l = make_generic_functional(dim, t_ + static_cast<unsigned long>((h >> 1) & 3));
  if (h & 1)
    for (auto& c : l.coefficients) c = -c;
  return l;
}

GenericFunctional FunctionalSchedule::offset(std::span<const int> prefix, std::size_t dim) const {
  std::mt19937_64 rng(key(prefix) ^ 0x5bd1e995ULL);
  auto small = [&rng] { return static_cast<long>(rng() % 5) - 2; };
  GenericFunctional l{small(), RatVector(dim)};
  for (auto& c : l.coefficients) c = small();
  return l;
}

GenericFunctional FunctionalSchedule::functional(std::span<const int> s, std::size_t dim) const {
  if (s.empty()) throw Error("functional: empty string");
  const auto prefix = s.first(s.size() - 1);
  GenericFunctional l = offset(prefix, dim);
  const GenericFunctional d = step(prefix, dim);
  const Rational last = s.back();
  l.constant += last * d.constant;
  for (std::size_t i = 0; i < dim; ++i) l.coefficients[i] += last * d.coefficients[i];
  return l;
}

bool certify_join(const PointConfiguration& f0, const PointConfiguration& f1) {
  return independent_affine_spans(f0.span(), f1.span()) && are_complementary(f0.span(), f1.span());
}

std::vector<std::vector<Rational>> schedule_levels(const PointConfiguration& p,
                                                   const FunctionalSchedule& schedule) {
  const std::size_t n = p.ambient_dim();
  std::vector<std::vector<Rational>> levels;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> level;
    level.reserve(p.size());
    for (const auto& x : p.points()) {
      std::vector<int> s;
      for (std::size_t j = 0; j < k; ++j) s.push_back(static_cast<int>(x[j].get_si()));
      const auto l = schedule.functional(s, n - k);
      level.push_back(l(std::span<const Integer>(x).subspan(k)));
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

HeightFunction build_height_function(const Matroid& m, const FunctionalSchedule& schedule) {
  const PointConfiguration p = base_polytope(m);
  HeightFunction h;
  h.levels.push_back(std::vector<Rational>(p.size()));
  for (auto& level : schedule_levels(p, schedule)) h.levels.push_back(std::move(level));
  return h;
}

namespace {

class Recursion {
 public:
  Recursion(const PointConfiguration& p, const FunctionalSchedule& schedule, std::set<std::size_t>* splits)
      : p_(p), schedule_(schedule), splits_(splits), n_(p.ambient_dim()) {}

  std::vector<Cell> run(std::vector<std::size_t> idx, std::size_t k) {
    if (idx.size() == 1) return {idx};
    if (k >= n_) throw Error("triangulate: repeated point in cell");
    Integer lo = p_[idx.front()][k], hi = lo;
    for (auto i : idx) {
      lo = std::min(lo, p_[i][k]);
      hi = std::max(hi, p_[i][k]);
    }
    if (lo == hi) {
      prefix_.push_back(static_cast<int>(lo.get_si()));
      auto cells = run(std::move(idx), k + 1);
      prefix_.pop_back();
      return cells;
    }
    if (hi != lo + 1) throw Error("triangulate: cell is not a translated matroid polytope");
    if (splits_) splits_->insert(k);

    std::vector<std::size_t> side0, side1;
    for (auto i : idx) (p_[i][k] == lo ? side0 : side1).push_back(i);

    const GenericFunctional step = schedule_.step(prefix_, n_ - k - 1);
    std::vector<Rational> heights;
    heights.reserve(idx.size());
    for (auto i : idx)
      heights.push_back(p_[i][k] == lo ? Rational(0) : step(std::span<const Integer>(p_[i]).subspan(k + 1)));
    const Subdivision coarse = lower_hull_subdivision(p_.subset(idx), heights);

    prefix_.push_back(static_cast<int>(lo.get_si()));
    const auto t0 = run(side0, k + 1);
    prefix_.back() += 1;
    const auto t1 = run(side1, k + 1);
    prefix_.pop_back();

    std::set<Cell> out;
    for (const auto& local : coarse.cells) {
      std::vector<std::size_t> f0, f1;
      for (auto li : local) {
        const std::size_t g = idx[li];
        (p_[g][k] == lo ? f0 : f1).push_back(g);
      }
      if (f0.empty() || f1.empty()) throw Error("triangulate: coarse cell misses one side");
      const PointConfiguration face0 = p_.subset(f0);
      const PointConfiguration face1 = p_.subset(f1);
      if (!certify_join(face0, face1))
        throw GenericityFailure("faces of a join cell are not complementary");
      const auto r0 = restrict_cells(t0, f0, face0.dim());
      const auto r1 = restrict_cells(t1, f1, face1.dim());
      for (const auto& a : r0)
        for (const auto& b : r1) {
          Cell c = a;
          c.insert(c.end(), b.begin(), b.end());
          std::sort(c.begin(), c.end());
          out.insert(std::move(c));
        }
    }
    return {out.begin(), out.end()};
  }

 private:
  static std::vector<Cell> restrict_cells(const std::vector<Cell>& cells, std::vector<std::size_t> face,
                                          std::size_t dim) {
    std::sort(face.begin(), face.end());
    std::set<Cell> out;
    for (const auto& c : cells) {
      Cell r;
      std::set_intersection(c.begin(), c.end(), face.begin(), face.end(), std::back_inserter(r));
      if (r.size() == dim + 1) out.insert(std::move(r));
    }
    return {out.begin(), out.end()};
  }

  const PointConfiguration& p_;
  const FunctionalSchedule& schedule_;
  std::set<std::size_t>* splits_;
  std::size_t n_;
  std::vector<int> prefix_;
};

}  // namespace

std::vector<Cell> triangulate_unit_cell(const PointConfiguration& p, std::span<const std::size_t> indices,
                                        const FunctionalSchedule& schedule,
                                        std::set<std::size_t>* split_coords) {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  return Recursion(p, schedule, split_coords).run(std::move(idx), 0);
}

Triangulation triangulate_base_polytope(const Matroid& m, const FunctionalSchedule& schedule) {
  PointConfiguration p = base_polytope(m);
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto cells = triangulate_unit_cell(p, all, schedule);
  Triangulation t{std::move(p), std::move(cells), std::nullopt};
  canonicalize(t);
  return t;
}

Integer default_t(const Matroid& m) {
  return Integer(static_cast<unsigned long>(m.size() * m.bases().size() + 2));
}

void attach_certificate(Subdivision& s, const HeightFunction& h, bool concretize) {
  RegularityCertificate cert;
  cert.levels = h.levels;
  for (const auto& c : s.cells) {
    std::vector<IntVector> pts;
    for (auto i : c) pts.push_back(s.base[i]);
    std::vector<AffineFunctional> w;
    for (const auto& level : h.levels) {
      std::vector<Rational> vals;
      for (auto i : c) vals.push_back(level[i]);
      auto f = interpolate_affine(pts, vals);
      if (!f) throw Error("attach_certificate: heights are not affine on a cell");
      w.push_back(std::move(*f));
    }
    cert.witnesses.push_back(std::move(w));
  }
  if (concretize) {
    auto concrete = concretize_epsilon(s, h);
    cert.epsilon = concrete.epsilon;
    cert.flat_heights = std::move(concrete.heights);
  }
  s.certificate = std::move(cert);
}

TriangulationRun triangulate_base_polytope(const Matroid& m, const TriangulatorOptions& options) {
  TriangulationRun run;
  run.seed = options.seed;
  Integer t = options.t_start.value_or(default_t(m));
  const PointConfiguration p = base_polytope(m);
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt, t += 1) {
    run.t_sequence.push_back(t);
    const FunctionalSchedule schedule(options.seed, t);
    std::set<std::size_t> splits;
    try {
      auto cells = triangulate_unit_cell(p, all, schedule, &splits);
      run.triangulation = Triangulation{p, std::move(cells), std::nullopt};
      canonicalize(run.triangulation);
      for (auto k : splits) run.split_order.push_back(k + 1);
      attach_certificate(run.triangulation, build_height_function(m, schedule), options.concretize);
      return run;
    } catch (const GenericityFailure&) {
    }
  }
  throw RetryCapExceeded("no generic schedule found within the retry cap");
}

}  // namespace dctri

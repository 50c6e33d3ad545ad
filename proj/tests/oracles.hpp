// Test-only reference computations. None of these call into the library's
// geometry: they count lattice points, take minors by cofactor expansion and
// enumerate simplices directly, trading speed for obviousness.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;

/// Determinant by cofactor expansion (small matrices only).
inline mpz_class det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][j] * det(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

/// gcd of the k x k minors of a k x n integer matrix (0 when rank < k).
inline mpz_class gcd_maximal_minors(const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  const std::size_t n = rows[0].size();
  mpz_class g = 0;
  std::vector<std::size_t> cols;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (cols.size() == k) {
      std::vector<std::vector<mpz_class>> m(k);
      for (std::size_t i = 0; i < k; ++i)
        for (auto c : cols) m[i].push_back(rows[i][c]);
      g = gcd(g, det(m));
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      cols.push_back(c);
      pick(c + 1);
      cols.pop_back();
    }
  };
  pick(0);
  return abs(g);
}

/// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        const mpq_class f = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

inline int affine_dim(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<mpq_class>> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> row;
    for (std::size_t j = 0; j < pts[i].size(); ++j) row.emplace_back(static_cast<long>(pts[i][j] - pts[0][j]));
    m.push_back(row);
  }
  return static_cast<int>(rank(m));
}

/// Integer points of {x : x(S) <= t f(S) for all S, x([n]) = t f([n])} by
/// scanning the box [t(f([n]) - f([n]\i)), t f(i)] coordinate by coordinate.
/// When `nonnegative_polymatroid` is set the equation is dropped and x >= 0
/// is imposed instead (polymatroid independence polytope).
inline std::vector<Vec> submodular_points(std::size_t n, const std::vector<long long>& f, long long t,
                                          bool nonnegative_polymatroid = false) {
  const std::uint32_t full = (1u << n) - 1;
  Vec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = t * f[1u << i];
    lo[i] = nonnegative_polymatroid ? 0 : t * (f[full] - f[full & ~(1u << i)]);
  }
  std::vector<Vec> out;
  Vec x(n);
  std::function<void(std::size_t)> scan = [&](std::size_t k) {
    if (k == n) {
      for (std::uint32_t s = 1; s <= full; ++s) {
        long long sum = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (s >> i & 1) sum += x[i];
        if (sum > t * f[s]) return;
        if (!nonnegative_polymatroid && s == full && sum != t * f[full]) return;
      }
      out.push_back(x);
      return;
    }
    for (x[k] = lo[k]; x[k] <= hi[k]; ++x[k]) scan(k + 1);
  };
  scan(0);
  return out;
}

inline mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct Ehrhart {
  int dim = 0;
  std::vector<mpz_class> counts;  ///< L(0), L(1), ..., L(max_t)
  mpz_class normalized_volume;
  std::vector<mpz_class> h_star;
};

/// Ehrhart data from the counts L(0..n). The dimension is the order of the
/// last nonvanishing finite difference; the normalized volume is that
/// difference, and h*_k = sum_j (-1)^j C(d+1, j) L(k - j).
inline Ehrhart ehrhart(const std::function<std::size_t(long long)>& count, std::size_t max_t) {
  Ehrhart e;
  for (std::size_t t = 0; t <= max_t; ++t) e.counts.emplace_back(static_cast<unsigned long>(count(t)));
  auto diff = [&](long d) {
    mpz_class s = 0;
    for (long k = 0; k <= d; ++k) s += ((d - k) % 2 ? -1 : 1) * binom(d, k) * e.counts[k];
    return s;
  };
  e.dim = 0;
  for (long d = static_cast<long>(max_t); d >= 0; --d)
    if (diff(d) != 0) {
      e.dim = static_cast<int>(d);
      break;
    }
  e.normalized_volume = diff(e.dim);
  for (long k = 0; k <= e.dim; ++k) {
    mpz_class h = 0;
    for (long j = 0; j <= k; ++j) h += (j % 2 ? -1 : 1) * binom(e.dim + 1, j) * e.counts[k - j];
    e.h_star.push_back(h);
  }
  return e;
}

inline Ehrhart ehrhart_submodular(std::size_t n, const std::vector<long long>& f, bool polymatroid = false) {
  return ehrhart([&](long long t) { return submodular_points(n, f, t, polymatroid).size(); }, n);
}

/// Rank function of the matroid with the given bases (bit masks).
inline std::vector<long long> rank_table(std::size_t n, const std::vector<std::uint32_t>& bases) {
  std::vector<long long> f(std::size_t{1} << n, 0);
  for (std::uint32_t s = 0; s < f.size(); ++s)
    for (auto b : bases) f[s] = std::max<long long>(f[s], __builtin_popcount(s & b));
  return f;
}

/// Unit cubes [a, a+1]^n meeting the point set in a full-dimensional
/// (relative to the whole set) subset.
inline std::size_t cube_slices(const std::vector<Vec>& pts) {
  const std::size_t n = pts.front().size();
  const int d = affine_dim(pts);
  Vec lo = pts.front(), hi = pts.front();
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::size_t count = 0;
  Vec a = lo;
  std::function<void(std::size_t)> scan = [&](std::size_t k) {
    if (k == n) {
      std::vector<Vec> in;
      for (const auto& p : pts) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) inside = p[i] >= a[i] && p[i] <= a[i] + 1;
        if (inside) in.push_back(p);
      }
      if (affine_dim(in) == d) ++count;
      return;
    }
    for (a[k] = lo[k]; a[k] <= std::max(lo[k], hi[k] - 1); ++a[k]) scan(k + 1);
  };
  scan(0);
  return count;
}

/// Triangulation induced by generic heights on a full-dimensional point set
/// in Z^d: every (d+1)-subset whose lifted affine hull lies strictly below
/// all other lifted points. Returns sorted index lists.
inline std::vector<std::vector<std::size_t>> regular_triangulation(const std::vector<Vec>& pts,
                                                                   const std::vector<mpq_class>& heights) {
  const std::size_t d = pts.front().size();
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == d + 1) {
      // Solve for (c, a) with c + a.p = h(p) on the picked points (Cramer).
      std::vector<std::vector<mpz_class>> m;
      for (auto i : pick) {
        std::vector<mpz_class> row{1};
        for (auto x : pts[i]) row.emplace_back(static_cast<long>(x));
        m.push_back(row);
      }
      const mpz_class dm = det(m);
      if (dm == 0) return;
      std::vector<mpq_class> coef(d + 1);
      for (std::size_t c = 0; c <= d; ++c) {
        // Cramer over Q: replace column c by the heights.
        mpq_class total = 0;
        for (std::size_t r = 0; r <= d; ++r) {
          std::vector<std::vector<mpz_class>> minor;
          for (std::size_t i = 0; i <= d; ++i) {
            if (i == r) continue;
            std::vector<mpz_class> row;
            for (std::size_t k = 0; k <= d; ++k)
              if (k != c) row.push_back(m[i][k]);
            minor.push_back(row);
          }
          const mpq_class cof = mpq_class(det(minor)) * (((r + c) % 2) ? -1 : 1);
          total += heights[pick[r]] * cof;
        }
        coef[c] = total / mpq_class(dm);
      }
      for (std::size_t p = 0; p < pts.size(); ++p) {
        if (std::find(pick.begin(), pick.end(), p) != pick.end()) continue;
        mpq_class v = coef[0];
        for (std::size_t k = 0; k < d; ++k) v += coef[k + 1] * static_cast<long>(pts[p][k]);
        if (heights[p] <= v) return;
      }
      cells.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace oracle

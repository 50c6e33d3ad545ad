#include "dctri/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dctri {

namespace {

std::vector<int> default_labels(std::size_t n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  return l;
}

void check_ground_set(std::size_t n) {
  if (n > kMaxGroundSet) throw Error("matroid ground set larger than " + std::to_string(kMaxGroundSet));
}

// Removes bit `pos` and shifts higher bits down.
ElementSet squeeze(ElementSet s, unsigned pos) {
  const ElementSet low = s & ((ElementSet{1} << pos) - 1);
  const ElementSet high = (s >> (pos + 1)) << pos;
  return low | high;
}

}  // namespace

MatroidValidation validate(std::size_t n, std::span<const ElementSet> bases) {
  MatroidValidation out;
  if (n > kMaxGroundSet) {
    out.reason = "ground set too large";
    return out;
  }
  if (bases.empty()) {
    out.reason = "basis family is empty";
    return out;
  }
  const ElementSet universe = n == 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
  const int r = std::popcount(bases.front());
  std::vector<ElementSet> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.reason = "duplicate basis";
    return out;
  }
  for (auto b : sorted) {
    if ((b & ~universe) != 0) {
      out.reason = "basis contains element outside the ground set";
      return out;
    }
    if (std::popcount(b) != r) {
      out.reason = "bases are not equicardinal";
      return out;
    }
  }
  for (auto b1 : sorted)
    for (auto b2 : sorted) {
      const ElementSet only1 = b1 & ~b2;
      const ElementSet only2 = b2 & ~b1;
      for (ElementSet xs = only1; xs; xs &= xs - 1) {
        const ElementSet x = xs & -xs;
        bool found = false;
        for (ElementSet ys = only2; ys && !found; ys &= ys - 1) {
          const ElementSet y = ys & -ys;
          found = std::binary_search(sorted.begin(), sorted.end(), (b1 & ~x) | y);
        }
        if (!found) {
          out.reason = "basis exchange fails";
          out.witness = ExchangeWitness{b1, b2, std::countr_zero(x) + 1};
          return out;
        }
      }
    }
  out.valid = true;
  return out;
}

Matroid Matroid::from_bases(std::size_t n, std::vector<ElementSet> bases) {
  check_ground_set(n);
  std::sort(bases.begin(), bases.end());
  auto v = validate(n, bases);
  if (!v) {
    std::string msg = "not a matroid: " + v.reason;
    if (v.witness)
      msg += " (x=" + std::to_string(v.witness->x) + ")";
    throw Error(msg);
  }
  return Matroid(n, std::move(bases), default_labels(n));
}

Matroid Matroid::from_basis_lists(std::size_t n, const std::vector<std::vector<int>>& bases) {
  check_ground_set(n);
  std::vector<ElementSet> sets;
  for (const auto& b : bases) {
    for (int e : b)
      if (e < 1 || static_cast<std::size_t>(e) > n) throw Error("basis element out of range");
    sets.push_back(set_from_list(b));
  }
  return from_bases(n, std::move(sets));
}

Matroid Matroid::uniform(std::size_t r, std::size_t n) {
  check_ground_set(n);
  if (r > n) throw Error("uniform matroid requires r <= n");
  std::vector<ElementSet> bases;
  for (ElementSet s = 0; s < (ElementSet{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == r) bases.push_back(s);
  return Matroid(n, std::move(bases), default_labels(n));
}

Matroid Matroid::graphic(std::size_t vertices, const std::vector<std::pair<int, int>>& edges) {
  const std::size_t m = edges.size();
  check_ground_set(m);
  for (auto [u, v] : edges)
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > vertices || static_cast<std::size_t>(v) > vertices)
      throw Error("graph edge endpoint out of range");

  auto forest_size = [&](ElementSet s, bool& acyclic) {
    std::vector<std::size_t> parent(vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    acyclic = true;
    std::size_t merged = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(s >> e & 1)) continue;
      auto a = find(static_cast<std::size_t>(edges[e].first));
      auto b = find(static_cast<std::size_t>(edges[e].second));
      if (a == b) acyclic = false;
      else {
        parent[a] = b;
        ++merged;
      }
    }
    return merged;
  };
  bool dummy = true;
  const ElementSet all = m == 0 ? 0 : (ElementSet{1} << m) - 1;
  const std::size_t r = forest_size(all, dummy);
  std::vector<ElementSet> bases;
  for (ElementSet s = 0; s <= all; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != r) continue;
    bool acyclic = true;
    forest_size(s, acyclic);
    if (acyclic) bases.push_back(s);
    if (s == all) break;
  }
  return Matroid(m, std::move(bases), default_labels(m));
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  const std::size_t n = a.size() + b.size();
  check_ground_set(n);
  std::vector<ElementSet> bases;
  for (auto x : a.bases())
    for (auto y : b.bases()) bases.push_back(x | (y << a.size()));
  std::sort(bases.begin(), bases.end());
  return Matroid(n, std::move(bases), default_labels(n));
}

std::size_t Matroid::rank() const { return static_cast<std::size_t>(std::popcount(bases_.front())); }

std::size_t Matroid::rank(ElementSet s) const {
  int best = 0;
  for (auto b : bases_) best = std::max(best, std::popcount(b & s));
  return static_cast<std::size_t>(best);
}

bool Matroid::is_independent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(), [s](ElementSet b) { return (b & s) == s; });
}

bool Matroid::is_loop(int e) const {
  const ElementSet bit = ElementSet{1} << (e - 1);
  return std::none_of(bases_.begin(), bases_.end(), [bit](ElementSet b) { return (b & bit) != 0; });
}

bool Matroid::is_coloop(int e) const {
  const ElementSet bit = ElementSet{1} << (e - 1);
  return std::all_of(bases_.begin(), bases_.end(), [bit](ElementSet b) { return (b & bit) != 0; });
}

Matroid Matroid::minor(int e, bool contract) const {
  if (e < 1 || static_cast<std::size_t>(e) > n_) throw Error("element out of range");
  const unsigned pos = static_cast<unsigned>(e - 1);
  const ElementSet bit = ElementSet{1} << pos;
  std::vector<ElementSet> out;
  for (auto b : bases_) {
    if (((b & bit) != 0) != contract) continue;
    out.push_back(squeeze(b, pos));
  }
  if (out.empty())
    throw Error(contract ? "cannot contract a loop" : "cannot delete a coloop");
  std::sort(out.begin(), out.end());
  std::vector<int> labels = labels_;
  labels.erase(labels.begin() + pos);
  return Matroid(n_ - 1, std::move(out), std::move(labels));
}

Matroid Matroid::delete_element(int e) const { return minor(e, false); }
Matroid Matroid::contract_element(int e) const { return minor(e, true); }

std::vector<ElementSet> Matroid::independent_sets() const {
  std::vector<ElementSet> out;
  for (auto b : bases_)
    for (ElementSet s = b;; s = (s - 1) & b) {
      out.push_back(s);
      if (s == 0) break;
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntVector indicator(ElementSet s, std::size_t n) {
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (s >> i) & 1;
  return v;
}

ElementSet set_from_list(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int e : elements) s |= ElementSet{1} << (e - 1);
  return s;
}

std::vector<int> list_from_set(ElementSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i + 1);
  return out;
}

}  // namespace dctri

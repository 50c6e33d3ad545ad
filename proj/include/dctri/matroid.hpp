// Matroids given by an explicit basis family.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dctri/exact_linalg.hpp"

namespace dctri {

/// Subset of the ground set; bit i is element i+1.
using ElementSet = std::uint32_t;

inline constexpr std::size_t kMaxGroundSet = 16;

/// Basis-exchange counterexample: removing `x` from `b1` admits no `y` in b2 \ b1.
struct ExchangeWitness {
  ElementSet b1 = 0;
  ElementSet b2 = 0;
  int x = 0;  ///< 1-indexed element
};

struct MatroidValidation {
  bool valid = false;
  std::string reason;
  std::optional<ExchangeWitness> witness;
  explicit operator bool() const { return valid; }
};

class Matroid {
 public:
  /// Validating constructor; throws Error when the family is not a matroid.
  static Matroid from_bases(std::size_t n, std::vector<ElementSet> bases);
  /// Element lists are 1-indexed.
  static Matroid from_basis_lists(std::size_t n, const std::vector<std::vector<int>>& bases);

  static Matroid uniform(std::size_t r, std::size_t n);
  /// Cycle matroid of a multigraph on vertices 1..vertices; bases are spanning forests.
  static Matroid graphic(std::size_t vertices, const std::vector<std::pair<int, int>>& edges);
  static Matroid direct_sum(const Matroid& a, const Matroid& b);

  std::size_t size() const { return n_; }
  std::size_t rank() const;
  const std::vector<ElementSet>& bases() const { return bases_; }
  /// Original labels of the elements after minors (1-indexed, length n).
  const std::vector<int>& labels() const { return labels_; }

  std::size_t rank(ElementSet s) const;
  bool is_independent(ElementSet s) const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;

  /// M \ e, ground set re-indexed to [n-1]. Throws if e is a coloop.
  Matroid delete_element(int e) const;
  /// M / e, ground set re-indexed to [n-1]. Throws if e is a loop.
  Matroid contract_element(int e) const;

  /// All independent sets, sorted.
  std::vector<ElementSet> independent_sets() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(std::size_t n, std::vector<ElementSet> bases, std::vector<int> labels)
      : n_(n), bases_(std::move(bases)), labels_(std::move(labels)) {}
  Matroid minor(int e, bool contract) const;

  std::size_t n_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<int> labels_;
};

/// Exhaustive check: nonempty, equicardinal, basis exchange for every triple.
MatroidValidation validate(std::size_t n, std::span<const ElementSet> bases);
inline MatroidValidation validate(const Matroid& m) { return validate(m.size(), m.bases()); }

/// Indicator vector of s in Z^n.
IntVector indicator(ElementSet s, std::size_t n);
ElementSet set_from_list(const std::vector<int>& elements);
std::vector<int> list_from_set(ElementSet s);

}  // namespace dctri

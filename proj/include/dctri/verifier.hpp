// Independent checks on a subdivision: unimodularity, covering, face-to-face
// intersections, regularity certificates, f/h-vectors, and flagness.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dctri/subdivision.hpp"

namespace dctri {

/// True iff the edge vectors v_i - v_0 form a basis of aff(vertices) ∩ Z^n.
/// Throws when the vertices are affinely dependent.
bool is_unimodular(std::span<const IntVector> vertices);

struct Failure {
  std::string check;
  std::string detail;
  std::vector<std::size_t> cells;   ///< indices into the cell list
  std::vector<std::size_t> points;  ///< indices into the point list
};

enum class RegularityStatus { Certified, Failed, Unverifiable };
enum class FlagStatus { Flag, NotFlag, NotComputed };

const char* to_string(RegularityStatus s);
const char* to_string(FlagStatus s);

struct SubdivisionCheck {
  bool well_formed = true;   ///< indices in range, no repeats, full-dimensional cells
  bool covers = false;
  bool face_to_face = false;
  bool disjointness_from_certificate = false;
  Integer volume;         ///< sum of cell volumes (simplices only)
  Integer oracle_volume;  ///< placing-triangulation volume of the point set
  std::vector<Failure> failures;
};

/// Pairwise face-to-face test: every pair of cells is separated by a
/// hyperplane containing exactly their common points. When
/// `certified_disjoint` is set, interiors are taken to be disjoint (a valid
/// regularity certificate implies it); otherwise the face-to-face LPs decide.
SubdivisionCheck check_subdivision(const Subdivision& s, bool certified_disjoint = false);

struct RegularityCheck {
  RegularityStatus status = RegularityStatus::Unverifiable;
  bool lexicographic = false;
  std::optional<bool> numeric;  ///< set when the certificate carries epsilon
  std::vector<Failure> failures;
};

/// For every cell and level, the affine witness must agree with the heights
/// on the cell, and the vector of level differences must be
/// lexicographically positive at every other point. The concretized heights,
/// when present, must equal the flattened levels and certify every cell on
/// their own.
RegularityCheck check_regularity(const Subdivision& s);

/// f_{-1}, f_0, ..., f_dim of the complex generated by the cells.
std::vector<Integer> f_vector(std::span<const Cell> cells, std::size_t dim);
std::vector<Integer> f_vector(const Triangulation& t);

/// h_0..h_dim, followed by h_{dim+1} only when it is nonzero.
std::vector<Integer> h_vector(std::span<const Cell> cells, std::size_t dim);
std::vector<Integer> h_vector(const Triangulation& t);

struct FlagResult {
  FlagStatus status = FlagStatus::NotComputed;
  std::vector<std::size_t> witness;  ///< a minimal non-face with at least 3 vertices
};

inline constexpr std::size_t kDefaultFlagBudget = 256;

/// Searches for a minimal non-face of size >= 3 among cliques of the
/// 1-skeleton. Complexes on more than `vertex_budget` vertices are skipped.
FlagResult flagness(std::span<const Cell> facets, std::size_t vertex_budget = kDefaultFlagBudget);
FlagResult flagness(const Triangulation& t, std::size_t vertex_budget = kDefaultFlagBudget);

struct VerificationReport {
  bool unimodular_all = false;
  bool face_to_face = false;
  bool covers = false;
  RegularityStatus regular_certified = RegularityStatus::Unverifiable;
  bool regular_lexicographic = false;
  std::optional<bool> regular_numeric;
  std::size_t cells = 0;
  Integer volume;
  Integer oracle_volume;
  std::vector<Integer> f_vector;
  std::vector<Integer> h_vector;
  FlagResult flag;
  std::vector<Failure> failures;

  /// Mandatory checks. A missing certificate passes only when allowed.
  bool passed(bool allow_uncertified = false) const;
};

struct VerifyOptions {
  bool compute_flag = true;
  std::size_t flag_budget = kDefaultFlagBudget;
};

VerificationReport verify(const Subdivision& s, const VerifyOptions& options = {});

}  // namespace dctri

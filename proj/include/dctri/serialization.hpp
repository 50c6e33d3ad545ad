// JSON formats for matroids, submodular functions, subdivisions and reports.
//
// Rationals are "p/q" strings and integers are bare numbers. Subset keys of
// submodular tables are sorted digit strings ("" for the empty set, "13" for
// {1,3}); for n >= 10 keys may instead be comma-separated ("1,10").
#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "dctri/dc_triangulator.hpp"
#include "dctri/genperm.hpp"
#include "dctri/matroid.hpp"
#include "dctri/verifier.hpp"

namespace dctri {

using Json = nlohmann::json;

/// Read errors: malformed documents or inputs that fail validation.
class InputError : public Error {
 public:
  using Error::Error;
};

Json parse_json_file(const std::string& path);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Accepts {"n", "bases"} or a constructor form ("uniform", "graphic",
/// "direct_sum").
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

/// True for documents that describe a set function rather than a matroid.
bool is_submodular_json(const Json& j);
/// Accepts {"n", "values"} or {"matroid_rank": <matroid>}.
SubmodularFunction submodular_from_json(const Json& j);
Json submodular_to_json(const SubmodularFunction& f);

Json points_to_json(const PointConfiguration& p);
PointConfiguration points_from_json(const Json& j);

/// {"points", "cells", "certificate"?}; the certificate stores the layered
/// heights, epsilon and flat heights (witnesses are recomputed on reading).
Json subdivision_to_json(const Subdivision& s, bool emit_certificate = true);
Subdivision subdivision_from_json(const Json& j);

Json metadata_to_json(const TriangulationRun& run);
Json triangulation_run_to_json(const TriangulationRun& run, bool emit_certificate = true);

Json report_to_json(const VerificationReport& r);

}  // namespace dctri

#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistrep/knot_system.hpp"
#include "twistrep/laurent_poly.hpp"
#include "twistrep/representation.hpp"
#include "twistrep/sampler.hpp"

namespace twistrep::json {

using nlohmann::json;

/// [re, im]
json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// Row-major list of rows of [re, im].
json matrix_to_json(const Mat3& m);
Mat3 matrix_from_json(const json& j);

/// [[e1, e2, e3, "coeff"], ...] in canonical order; coefficients as decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// {"k", "variables": ["l1", "l2"], "terms": [[e1, e2, "coeff"], ...], "degree": [d1, d2]}
json curve_to_json(const CurveSpec& spec);
CurveSpec curve_from_json(const json& j);

/// A representation file. Branch and sheet are included when present.
struct RepresentationRecord {
  int k = 1;
  Representation rep;
  std::optional<LambdaTriple> lambda;
  std::optional<int> branch;
  std::optional<int> sheet;
};

json representation_to_json(const RepresentationRecord& r);
/// Throws DomainError on missing or malformed fields.
RepresentationRecord representation_from_json(const json& j);

json character_to_json(const CharacterRecord& c);
json residuals_to_json(const ResidualMap& r);

/// Array of {"lambda", "representations", "residuals", "accepted", "reject_reason"}.
json sample_run_to_json(const SampleRun& run);
/// Representations contained in a sample-run array.
std::vector<RepresentationRecord> sample_run_representations(const json& j);

}  // namespace twistrep::json

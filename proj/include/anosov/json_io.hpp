#pragma once

// JSON reading and writing for matrices, polynomials, representations and reports.

#include <json.hpp>

#include <optional>
#include <string>

#include "anosov/decider.hpp"
#include "anosov/freenilp.hpp"

namespace anosov::json_io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InvalidInput.
Json parse(const std::string& text);

/// Array of arrays of "p/q" strings (plain integers also accepted on input).
RatMatrix matrix_from_json(const Json& j);
Json to_json(const RatMatrix& m);
/// Ascending coefficient array of integer strings.
IntPoly poly_from_json(const Json& j);
Json to_json(const IntPoly& f);

struct RepInput {
  RationalRep rep;
  std::optional<unsigned> c;
};

/// {"generators": [...], "rep_images": [...] (optional), "class": c (optional)}.
RepInput rep_from_json(const Json& j, std::size_t max_order = kDefaultMaxOrder);

Json to_json(const HyperbolicityReport& r);
Json to_json(const ComponentProfile& p);
Json decomposition_to_json(const std::vector<ComponentProfile>& classes);
Json to_json(const WitnessCertificate& w);
Json to_json(const Verdict& v);
Json to_json(const NoCertificateReport& r);
Json units_to_json(const NumberField& k, unsigned c, long bound, const UnitSearchResult& r);
Json graded_action_to_json(const RatMatrix& m, const HallBasis& basis, const FullActionReport& report);
Json hall_basis_to_json(const HallBasis& basis);

std::string to_string(CircleStatus s);

}  // namespace anosov::json_io

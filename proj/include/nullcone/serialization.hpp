#pragma once

#include <json.hpp>

#include "nullcone/resolutions.hpp"

namespace nullcone {

using Json = nlohmann::json;

/// Matrices interchange as JSON arrays of arrays of scalar strings.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& u);
Subspace subspace_from_json(const Json& j);

Json form_to_json(const BilinearForm& form);
BilinearForm form_from_json(const Json& j);

/// Null points serialize tagged: {"case":"os","t":...} or
/// {"case":"gl","a":...,"b":...}.
Json null_point_to_json(const ExactMatrix& t);
Json null_point_to_json(const ExactMatrix& a, const ExactMatrix& b);

struct ParsedNullPoint {
    bool is_os = false;
    ExactMatrix t;
    ExactMatrix a;
    ExactMatrix b;
};
ParsedNullPoint null_point_from_json(const Json& j);

Json resolution_point_to_json(const ResolutionPointOS& p);
Json resolution_point_to_json(const ResolutionPointGL& p);
Json resolution_point_to_json(const ResolutionPointGL1& p);
Json resolution_point_to_json(const ResolutionPointGL2& p);

Json orbit_point_to_json(const OrbitPointOS& p);
Json orbit_point_to_json(const OrbitPointGL& p);
Json orbit_point_to_json(const OrbitPointGL1& p);
Json orbit_point_to_json(const OrbitPointGL2& p);

/// Parses text that must be a JSON document; wraps syntax errors with
/// their byte location.
Json parse_json_text(const std::string& text);

} // namespace nullcone

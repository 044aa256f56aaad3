#pragma once

#include <string>

#include "json.hpp"

#include "deglag/multipoly.hpp"

namespace deglag {

/// JSON form: array of term records [{"ex":u,"el":u,"ea":u,"coeff":"p/q"}],
/// in the polynomial's term order. Round-trips bit-exactly.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

/// CSV form: one `ex,el,ea,p/q` row per term, no header, '\n' separators.
std::string poly_to_csv(const MultiPoly& p);
MultiPoly poly_from_csv(const std::string& csv);

}  // namespace deglag

#pragma once

#include <string>

#include <json.hpp>

#include "expnev/laurent.hpp"
#include "expnev/unit_basis.hpp"
#include "expnev/ypoly.hpp"

namespace expnev {

/// Canonical JSON forms.  Objects use sorted keys and every list has a fixed
/// order, so equal values dump to identical bytes.
nlohmann::json zpoly_to_json(const ZPoly& p);  ///< ascending coefficient strings
ZPoly zpoly_from_json(const nlohmann::json& j);
nlohmann::json basis_to_json(const UnitBasis& b);
UnitBasis basis_from_json(const nlohmann::json& j);
/// [{"exponents": [...], "num": [...], "den": [...]}, ...] in graded-lex order.
nlohmann::json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t arity);
/// Coefficients A_0..A_{d-1} (leading 1 implicit).
nlohmann::json ypoly_to_json(const MonicYPoly& f);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace expnev

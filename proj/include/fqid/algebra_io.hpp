#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fqid/algebra.hpp"

namespace fqid {

/// Reads the algebra file schema:
///   {"field": {"p": 2, "k": 1, "modulus": [..]?}, "dim": 2, "bracket": false,
///    "basis_names": ["t", "t^2"], "table": [[["0","1"], ...], ...]}
/// Table entries are field literals given as strings (plain integers are
/// also accepted).
Algebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const Algebra& algebra);

/// `builtin:<name>(<params>)` or a path to an algebra file.
Algebra load_algebra(std::string_view source);

}  // namespace fqid

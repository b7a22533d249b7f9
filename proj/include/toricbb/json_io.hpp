#pragma once

// JSON interchange for polytopes and integers.
//
// Polytope format: {"dim": d, "vertices": [[int, ...], ...]}. Coordinates that
// do not fit in a signed 64-bit integer are written as decimal strings; both
// forms are accepted on input.

#include "toricbb/polytope.hpp"

#include <json.hpp>

#include <string_view>

namespace toricbb {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j);

nlohmann::json vertex_set_to_json(const VertexSet& s);

nlohmann::json polytope_to_json(const Polytope& p);
/// Throws InputError on malformed documents and on invalid polytopes.
Polytope polytope_from_json(const nlohmann::json& j);

/// Comma-separated integers such as "-1,1,2".
IntVector parse_int_list(std::string_view text);

}  // namespace toricbb

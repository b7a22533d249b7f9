#include "toricbb/json_io.hpp"

#include "toricbb/errors.hpp"

#include <limits>
#include <string>

namespace toricbb {

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw InputError("expected an integer, got an empty string");
  s = s.substr(first, last - first + 1);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace

nlohmann::json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer or a decimal string, got " + j.dump());
}

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

nlohmann::json vertex_set_to_json(const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : s) out.push_back(i);
  return out;
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
  return {{"dim", p.dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("polytope JSON needs a \"vertices\" array");
  const auto& jv = j.at("vertices");
  if (!jv.is_array()) throw InputError("polytope JSON: \"vertices\" must be an array");
  std::vector<IntVector> verts;
  for (const auto& row : jv) verts.push_back(vector_from_json(row));
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer()) throw InputError("polytope JSON: \"dim\" must be an integer");
    auto d = j.at("dim").get<std::int64_t>();
    for (const auto& v : verts) {
      if (static_cast<std::int64_t>(v.size()) != d) {
        throw InputError("polytope JSON: vertex " + to_string(v) + " does not have dim coordinates");
      }
    }
  }
  return Polytope::build(std::move(verts));
}

IntVector parse_int_list(std::string_view text) {
  IntVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_integer(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace toricbb

#include "scg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "scg/error.hpp"

namespace scg::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail("expected a rational string or integer, got " + j.dump());
}

Vertex vertex_from_json(const Json& j) {
  if (!j.is_number_integer()) parse_fail("vertex ids must be integers, got " + j.dump());
  const long v = j.get<long>();
  if (v < 1) throw Error(ErrorCode::VertexOutOfRange, "vertex id " + std::to_string(v) + " below 1");
  if (v > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "vertex id " + std::to_string(v) + " above 64");
  return static_cast<Vertex>(v);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SimplicialComplex parse_complex(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("facets")) {
    parse_fail("complex JSON needs \"n\" and \"facets\"");
  }
  if (!j["n"].is_number_integer()) parse_fail("\"n\" must be an integer");
  const long n = j["n"].get<long>();
  if (n < 0) parse_fail("\"n\" must be nonnegative");
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "n = " + std::to_string(n) + " exceeds 64");
  if (!j["facets"].is_array()) parse_fail("\"facets\" must be an array");
  std::vector<Face> facets;
  for (const Json& f : j["facets"]) {
    if (!f.is_array()) parse_fail("each facet must be an array of vertex ids");
    Face face;
    for (const Json& v : f) {
      const Vertex id = vertex_from_json(v);
      if (id > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex id " + std::to_string(id) + " exceeds n = " + std::to_string(n));
      }
      if (face.contains(id)) parse_fail("duplicate vertex " + std::to_string(id) + " in a facet");
      face = face.with(id);
    }
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(static_cast<int>(n), facets);
}

SimplicialComplex load_complex(const std::filesystem::path& path) { return parse_complex(read_file(path)); }

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (Face f : complex.facets()) facets.push_back(f.vertices());
  return Json{{"n", complex.n()}, {"facets", std::move(facets)}};
}

Face parse_face_key(std::string_view key) {
  if (key.empty()) parse_fail("the empty face cannot carry a value");
  Face face;
  Vertex last = 0;
  while (!key.empty()) {
    const auto comma = key.find(',');
    const std::string_view part = key.substr(0, comma);
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      parse_fail("malformed face key component '" + std::string(part) + "'");
    }
    if (v < 1 || v > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "vertex id out of range in face key");
    if (v <= last) parse_fail("face key ids must be strictly increasing");
    face = face.with(v);
    last = v;
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
    if (key.empty()) parse_fail("trailing comma in face key");
  }
  return face;
}

Game parse_game(std::string_view text, const ComplexPtr& complex) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object()) {
    parse_fail("game JSON needs a \"values\" object");
  }
  std::map<Face, Rational> values;
  for (const auto& [key, value] : j["values"].items()) {
    const Face face = parse_face_key(key);
    if (!complex->contains(face)) {
      throw Error(ErrorCode::GameFaceNotInComplex, "game face " + face.to_string() + " is not in the complex");
    }
    if (!values.emplace(face, rational_from_json(value)).second) parse_fail("duplicate face key " + key);
  }
  return Game(complex, values);
}

Game load_game(const std::filesystem::path& path, const ComplexPtr& complex) {
  return parse_game(read_file(path), complex);
}

Json game_to_json(const Game& v) {
  Json values = Json::object();
  for (const auto& [face, value] : v.support()) values[face.key()] = value.to_string();
  return Json{{"values", std::move(values)}};
}

Permutation parse_permutation(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("perm") || !j["perm"].is_array()) {
    parse_fail("permutation JSON needs a \"perm\" array");
  }
  std::vector<Vertex> images;
  for (const Json& v : j["perm"]) {
    if (!v.is_number_integer()) parse_fail("permutation images must be integers");
    images.push_back(v.get<Vertex>());
  }
  return Permutation(std::move(images));
}

Json permutation_to_json(const Permutation& p) { return Json{{"perm", p.images()}}; }

Json group_value_to_json(const GroupValue& g) {
  Json values = Json::object();
  for (const auto& [i, value] : g.values) values[std::to_string(i)] = value.to_string();
  return Json{{"values", std::move(values)}, {"total", g.total().to_string()}};
}

GroupValue group_value_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values")) parse_fail("group value JSON needs \"values\"");
  GroupValue out;
  for (const auto& [key, value] : j["values"].items()) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size()) parse_fail("bad player key " + key);
    out.values.emplace(v, rational_from_json(value));
  }
  return out;
}

Json efficiency_to_json(const EfficiencyCoefficients& e) {
  Json coefficients = Json::object();
  for (const auto& [face, a] : e.coefficients) coefficients[face.key()] = a.to_string();
  return Json{{"coefficients", std::move(coefficients)}};
}

EfficiencyCoefficients efficiency_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients")) parse_fail("efficiency JSON needs \"coefficients\"");
  EfficiencyCoefficients out;
  for (const auto& [key, value] : j["coefficients"].items()) {
    out.coefficients.emplace(parse_face_key(key), rational_from_json(value));
  }
  return out;
}

}  // namespace scg::io

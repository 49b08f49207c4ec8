#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "scg/game.hpp"
#include "scg/permutation.hpp"
#include "scg/simplicial_complex.hpp"
#include "scg/values.hpp"

namespace scg::io {

using Json = nlohmann::ordered_json;

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// {"n": <int>, "facets": [[v, ...], ...]}, 1-based ids.
/// Throws ParseError (with line/column for malformed JSON) or VertexOutOfRange.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex load_complex(const std::filesystem::path& path);
Json complex_to_json(const SimplicialComplex& complex);

/// {"values": {"1,2,3": "5/2", "2": "-1", ...}}; keys are strictly increasing
/// comma-joined ids, values rational strings or integers. The empty key is
/// rejected. Throws ParseError or GameFaceNotInComplex.
Game parse_game(std::string_view text, const ComplexPtr& complex);
Game load_game(const std::filesystem::path& path, const ComplexPtr& complex);
Json game_to_json(const Game& v);

/// {"perm": [2, 1, 3, ...]}.
Permutation parse_permutation(std::string_view text);
Json permutation_to_json(const Permutation& p);

/// {"values": {"1": "1/4", ...}, "total": "1/2"}.
Json group_value_to_json(const GroupValue& g);
GroupValue group_value_from_json(const Json& j);

/// {"coefficients": {"1,2": "1/2", ...}}.
Json efficiency_to_json(const EfficiencyCoefficients& e);
EfficiencyCoefficients efficiency_from_json(const Json& j);

/// Parses a key such as "1,2,3". Throws ParseError.
Face parse_face_key(std::string_view key);

}  // namespace scg::io

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "simplex_spectra/complex.hpp"

namespace simplex_spectra {

/// Parse the complex interchange format:
///   { "vertices": <int or [{"id":int,"weight":float}]>,
///     "edges": [[u,v] or {"u":int,"v":int,"weight":float}],
///     "faces": [[a,b,c] or {"v":[a,b,c],"weight":float}],
///     "indexing": "zero"|"one",
///     "complete_graph": bool }
/// Omitted weights default to 1. With "complete_graph": true the edge list
/// is synthesized as all pairs and must be omitted.
Triangulation load_complex(const nlohmann::json& doc);
Triangulation load_complex_stream(std::istream& is);
Triangulation load_complex_file(const std::string& path);

/// Serialize zero-indexed; compact arrays when homogeneous, explicit
/// weight objects otherwise. Complete graphs use "complete_graph": true
/// with the edge list omitted (when edge weights are homogeneous).
nlohmann::ordered_json complex_to_json(const Triangulation& t);

} // namespace simplex_spectra

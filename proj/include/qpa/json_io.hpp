#pragma once

#include <string>

#include <json.hpp>

#include "qpa/complex_matrix.hpp"
#include "qpa/system.hpp"

namespace qpa {

/// Matrices travel as nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// System file format: {"n": <ambient>, "basis": [<matrix>, ...]}.
nlohmann::json system_to_json(const MatricialSystem& s);
MatricialSystem system_from_json(const nlohmann::json& j);
MatricialSystem load_system_file(const std::string& path);

} // namespace qpa

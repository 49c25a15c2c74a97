#pragma once

#include <string>

#include "json.hpp"
#include "tabkit/bijections.hpp"
#include "tabkit/paths.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

// Text forms. Tableau: rows joined by ';', entries by ',' ("1,3,4;2,4,5").
// Lattice path: the step-index word ("121212"), digits 1..9. 0/1-vector path:
// comma-separated step bitmasks ("1,3,4,11,3").

std::string to_text(const IncreasingTableau& t);
IncreasingTableau tableau_from_text(const std::string& text);

std::string to_text(const LatticePath& p);
LatticePath lattice_path_from_text(const std::string& text);

std::string to_text(const SchroderPath& p);
SchroderPath schroder_path_from_text(const std::string& text);

std::string to_text(const RowIncreasingTableau& t);
RowIncreasingTableau row_increasing_from_text(const std::string& text);

// JSON forms mirror the text forms; tableaux carry shape and deficit.

nlohmann::json to_json(const IncreasingTableau& t);
IncreasingTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LatticePath& p);
LatticePath lattice_path_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SchroderPath& p);
SchroderPath schroder_path_from_json(const nlohmann::json& j);

/// Shape specifications: "3x3" (rectangle), "hook:6,2" (cells, leg), or an
/// explicit part list "4,1,1".
Partition parse_shape(const std::string& text);

}  // namespace tabkit

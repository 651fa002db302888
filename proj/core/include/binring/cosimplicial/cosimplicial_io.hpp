#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"

#include <nlohmann/json.hpp>

namespace binring {

// {"kind": "cosimplicial", "ranks": [...], "cofaces": [[matrix, ...], ...],
//  "codegeneracies": [[matrix, ...], ...]}; the simplicial form uses
// "faces" and "degeneracies". Matrices use the complex JSON form.

nlohmann::json to_json(const CosimplicialAbGroup& a);
nlohmann::json to_json(const SimplicialAbGroup& a);
CosimplicialAbGroup cosimplicial_from_json(const nlohmann::json& j);
SimplicialAbGroup simplicial_from_json(const nlohmann::json& j);

}  // namespace binring

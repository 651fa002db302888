#pragma once

#include "binring/linalg/cochain_complex.hpp"
#include "binring/linalg/cohomology.hpp"

#include <nlohmann/json.hpp>

namespace binring {

// Matrices: {"rows": r, "cols": c, "entries": [[row, col, "value"], ...]}.
// Complexes: {"lo": n0, "ranks": [...], "differentials": [matrix, ...]}.
// Entries are decimal strings so that arbitrary precision survives.

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CochainComplex& c);
CochainComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CohomologyGroup& g);

}  // namespace binring

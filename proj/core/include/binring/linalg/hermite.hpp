#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <optional>
#include <vector>

namespace binring {

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in [0, pivot).
struct HermiteForm {
  IntMatrix basis;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hermite_row_form(const IntMatrix& a);

/// Integer coordinates of `v` in the rows of a Hermite basis, or nullopt when
/// v is not in the lattice.
std::optional<std::vector<Integer>> lattice_coordinates(const HermiteForm& h,
                                                        const std::vector<Integer>& v);

}  // namespace binring

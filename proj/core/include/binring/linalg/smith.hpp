#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <vector>

namespace binring {

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... | dr.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Nonzero diagonal entries of D, all positive, in divisibility order.
  std::vector<Integer> invariants;

  std::size_t rank() const { return invariants.size(); }
};

struct SmithOptions {
  bool transforms = true;
  /// Matrices with both dimensions at or below this use dense storage.
  std::size_t dense_threshold = 64;
  /// Force the sparse elimination path regardless of size.
  bool force_sparse = false;
};

SmithDecomposition smith_normal_form(const IntMatrix& a, const SmithOptions& options = {});

/// Invariant factors only; skips accumulating U and V.
std::vector<Integer> invariant_factors(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

/// Checks U*A*V == D, the divisibility chain, nonnegativity, and that U and V
/// are unimodular (their own invariant factors are all 1).
bool verify_smith(const IntMatrix& a, const SmithDecomposition& s);

/// Basis of the integral kernel {x : A x = 0} as the columns of the result.
/// The kernel is a direct summand of Z^cols.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace binring

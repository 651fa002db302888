#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"
#include "binring/linalg/cochain_complex.hpp"

namespace binring {

/// Moore complex: A^n in degree n with d = sum_i (-1)^i d^i, degrees [0, T].
CochainComplex unnormalized_complex(const CosimplicialAbGroup& a);

/// Normalized complex N(A). N^n is realized inside A^n as the intersection of
/// the kernels of the codegeneracies out of A^n, which is an integral
/// complement of the degenerate part. `basis[n]` has the chosen basis of N^n
/// as columns (Hermite-canonical, so a coordinate subspace comes out as the
/// surviving unit vectors in their original order).
struct Normalization {
  CochainComplex complex;
  CochainComplex unnormalized;
  std::vector<IntMatrix> basis;
  /// N(A) -> unnormalized_complex(A).
  ComplexMap inclusion() const;
};

/// Cohomology of the result agrees with the untruncated object below degree T.
Normalization normalize(const CosimplicialAbGroup& a);

CochainComplex normalized_complex(const CosimplicialAbGroup& a);

}  // namespace binring

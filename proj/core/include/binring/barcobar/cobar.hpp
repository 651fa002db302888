#pragma once

#include "binring/barcobar/algebra.hpp"
#include "binring/barcobar/bigraded.hpp"
#include "binring/barcobar/coalgebra.hpp"
#include "binring/cosimplicial/cosimplicial.hpp"

#include <string>
#include <vector>

namespace binring {

/// One basis element of a tensor power: parts d_1..d_n and an index into
/// the degree-d_i basis for each factor.
struct TensorWord {
  std::vector<unsigned> parts;
  std::vector<std::size_t> indices;
  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

/// Words of length n and total degree d, ordered lexicographically by parts
/// and then by indices. Parts are >= 1 unless `allow_unit`, in which case a
/// part 0 stands for the unit (rank 1).
std::vector<TensorWord> tensor_words(const std::vector<std::size_t>& ranks, unsigned n, unsigned d,
                                     bool allow_unit = false);

/// Reduced cobar complex: (n, d) spanned by words of length n and degree d,
/// d(c_1|...|c_n) = sum_{i=1}^{n} (-1)^i c_1|..|Dbar(c_i)|..|c_n. Stored up
/// to length n_max + 1 so that cohomology at n_max is final. Throws Error
/// unless n_max <= d_max <= C.d_max().
BigradedComplex cobar_complex(const GradedCoalgebra& c, int n_max, unsigned d_max);

BidegreeTable cobar_cohomology(const GradedCoalgebra& c, int n_max, unsigned d_max);

/// The unnormalized cosimplicial object [n] -> C^{(x) n} restricted to
/// internal degree d, truncated at t: d^0 and d^n insert the unit, inner
/// cofaces apply the full diagonal, s^i applies the counit to factor i+1.
CosimplicialAbGroup cobar_cosimplicial(const GradedCoalgebra& c, unsigned d, int t);

/// Bar complex B(A) = T^c(s Abar) with the bar differential merging adjacent
/// factors, (n, d) spanned by words of length n. In the dg case n is the
/// total degree sum(|a_i| + 1) and the internal differential is included.
BigradedComplex bar_complex(const GradedAlgebra& a, int n_max, unsigned d_max);

/// B(f) in each internal degree 0..d_max, on the stored range of the bar
/// window (common to source and target).
std::vector<ComplexMap> bar_map(const AlgebraMap& f, int n_max, unsigned d_max);

BidegreeTable bar_homology(const GradedAlgebra& a, int n_max, unsigned d_max);

struct DualComparison {
  bool equal = false;
  /// Bidegrees (n, d) of the cobar differential (n-1 -> n) that differ from
  /// the transposed bar differential.
  std::vector<Bidegree> mismatches;
  std::size_t compared = 0;
};

/// Compares the transpose of the cobar complex of C with the bar complex of
/// the dual algebra, matrix by matrix.
DualComparison dual_compare(const GradedCoalgebra& c, int n_max, unsigned d_max);

/// Length filtration F_n = tensors of length >= n.
struct LengthFiltration {
  unsigned n = 0;
  /// Rank of F_{n-1}/F_n = Cbar^{(x)(n-1)} in each internal degree; its
  /// differential is zero because C carries none.
  std::vector<std::size_t> slice_ranks;
  /// Omega/F_n: lengths 0..n-1.
  BigradedComplex quotient;
};

LengthFiltration filtration_quotients(const GradedCoalgebra& c, unsigned n, unsigned d_max);

}  // namespace binring

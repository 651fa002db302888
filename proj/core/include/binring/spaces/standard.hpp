#pragma once

#include "binring/spaces/simplicial_set.hpp"

#include <string>
#include <vector>

namespace binring {

FiniteSimplicialSet point();

/// Ordered simplicial complex on integer vertex labels, closed under faces.
/// Every face of a facet becomes a core named "[v0,v1,...]" with vertices
/// sorted increasingly.
FiniteSimplicialSet from_simplicial_complex(std::string name, const std::vector<std::vector<int>>& facets);

/// The standard n-simplex: every nonempty subset of {0..n}.
FiniteSimplicialSet simplex(unsigned n);
/// Proper faces of the n-simplex (a sphere of dimension n-1). Requires n >= 1.
FiniteSimplicialSet boundary(unsigned n);

/// Delta^n / boundary: one vertex and one n-simplex whose faces are all the
/// degenerate vertex. sphere(0) is two points.
FiniteSimplicialSet sphere(unsigned n);
FiniteSimplicialSet circle();

/// Degreewise product X_m x Y_m. The nondegenerate simplices are the pairs of
/// simplices without a common degeneracy direction (the shuffles of cores).
struct ProductSet {
  FiniteSimplicialSet set;
  FiniteSimplicialSet x, y;
  /// The simplex (a, b) of X x Y in normal form; a and b share a dimension.
  Simplex pair(const Simplex& a, const Simplex& b) const;

  std::map<std::pair<Simplex, Simplex>, std::size_t> core_index;
};

ProductSet product_set(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);
FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);

FiniteSimplicialSet torus();

/// The six-vertex real projective plane, triangles
/// 123 134 145 156 126 235 245 246 346 356.
FiniteSimplicialSet rp2();

/// Fixture lookup: point, circle, torus, rp2, sphereN, simplexN, boundaryN.
/// Throws Error on an unknown name.
FiniteSimplicialSet standard_space(const std::string& name);
std::vector<std::string> standard_space_names();

}  // namespace binring

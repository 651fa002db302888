#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"
#include "binring/linalg/cohomology.hpp"
#include "binring/spaces/standard.hpp"

#include <map>
#include <optional>
#include <string>

namespace binring {

/// Degreewise tensor product (A (x) B)^m = A^m (x) B^m with diagonal structure
/// maps (Kronecker products).
CosimplicialAbGroup degreewise_tensor(const CosimplicialAbGroup& a, const CosimplicialAbGroup& b);

/// The outer product (Z^X (x) Z^Y)^m -> Z^{(X x Y)_m}, f (x) g -> ((x, y) -> f(x) g(y)),
/// for m <= t.
std::vector<IntMatrix> outer_product_map(const ProductSet& p, int t);

/// sum_{p+q=n} H^p(X) (x) H^q(Y) + sum_{p+q=n+1} Tor(H^p(X), H^q(Y)), for
/// every n such that all the inputs are present.
std::map<int, CohomologyGroup> kunneth_formula(const std::map<int, CohomologyGroup>& hx,
                                               const std::map<int, CohomologyGroup>& hy);

CohomologyGroup tensor(const CohomologyGroup& a, const CohomologyGroup& b);
CohomologyGroup tor(const CohomologyGroup& a, const CohomologyGroup& b);

struct KunnethReport {
  std::string x, y;
  int truncation = 0;
  /// The outer product commutes with every coface and codegeneracy.
  bool cosimplicial_map = false;
  std::optional<IdentityViolation> map_failure;
  /// H^n of the outer product is an isomorphism for every n < truncation.
  bool quasi_iso = false;
  std::map<int, CohomologyGroup> tensor_groups;   // H^n of Z^X (x) Z^Y
  std::map<int, CohomologyGroup> product_groups;  // H^n(X x Y)
  std::map<int, CohomologyGroup> formula_groups;  // Kunneth prediction
  bool formula_matches = false;
  bool passed() const { return cosimplicial_map && quasi_iso && formula_matches; }
};

/// Compares Z^X (x) Z^Y with Z^{X x Y} below t. Internally works at t + 1 so
/// that H^{t-1} is compared exactly.
KunnethReport kunneth_check(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int t);

}  // namespace binring

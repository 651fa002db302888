#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"
#include "binring/linalg/cohomology.hpp"
#include "binring/spaces/simplicial_set.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace binring {

/// Z^X truncated at t: level m is the ring of functions X_m -> Z in the basis
/// of indicator functions, cofaces and codegeneracies are precomposition with
/// the faces and degeneracies of X (the transposes of Z[X]).
CosimplicialAbGroup cochain_ring(const FiniteSimplicialSet& x, int t);

struct SpaceCohomology {
  std::string space;
  int truncation = 0;
  /// H^n(X; Z) for 0 <= n < truncation.
  std::map<int, CohomologyGroup> groups;
  std::vector<std::string> warnings;
};

/// Cohomology of the normalized cochains N(Z^X). Warns when t does not exceed
/// the top dimension of X, since groups in degrees >= t are not computed.
SpaceCohomology space_cohomology(const FiniteSimplicialSet& x, int t);

struct BinomialityReport {
  std::string subject;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && checks > 0; }
};

/// Samples integer cochains a on every level m <= t of Z^X and checks, pointwise,
/// that (a^p - a)/p is an integer for p in {2, 3, 5, 7}, that binom(a, n) is an
/// integer for n <= 5, and that every coface commutes with products and with
/// binom(-, n).
BinomialityReport binomiality_check(const FiniteSimplicialSet& x, int t, std::size_t samples, std::uint64_t seed);

/// The same axioms in Num[x]: for sampled f with internal degree <= max_degree,
/// f^p - f is divisible by p and f (f - 1) ... (f - n + 1) by n! in the
/// Mahler basis.
BinomialityReport num_binomiality_check(std::size_t samples, std::uint64_t seed, unsigned max_degree = 4);

/// binom(a, n) for any integer a.
Integer binomial(const Integer& a, unsigned long n);

}  // namespace binring

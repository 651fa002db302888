#pragma once

#include "binring/binomial/multi_index.hpp"
#include "binring/linalg/int_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace binring {

/// Level n of the cosimplicial ring Z^{K(Z,1)} is the ring of all functions
/// Z^n -> Z. Its cofaces precompose with the faces of the simplicial model
/// (drop the first coordinate, add two neighbours, drop the last) and its
/// codegeneracies with the degeneracies (insert a zero).
std::vector<Integer> k1_face(const std::vector<Integer>& a, std::size_t i);
std::vector<Integer> k1_degeneracy(const std::vector<Integer>& a, std::size_t i);

/// The cobar basis element prod_i binom(x_i, d_i) of level d.size(), viewed as
/// a function on Z^n.
Integer cobar_function(const MultiIndex& d, const std::vector<Integer>& a);

/// (d^i f)(a) computed in Z^{K_1}: f evaluated at the face d_i(a).
Integer coface_value(const MultiIndex& d, std::size_t i, const std::vector<Integer>& a);
/// The same value predicted by the cobar coface of Num[x]^{(x) n}: the unit
/// inserted for i = 0 or i = n, the Vandermonde diagonal on factor i
/// otherwise.
Integer predicted_coface_value(const MultiIndex& d, std::size_t i, const std::vector<Integer>& a);

struct Alpha1Report {
  unsigned max_degree = 0;
  unsigned max_level = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t discrepancies = 0;
  std::string first_discrepancy;
  /// The linear function x is a cocycle in level 1 that is not a coboundary,
  /// and the linear functions form a copy of Z[-1] (the dual of the simplicial
  /// model) inside Z^{K_1} on every sampled tuple.
  bool linear_class = false;
  bool passed() const { return discrepancies == 0 && checks > 0 && linear_class; }
};

/// For `samples` seeded tuples in [-10, 10]^m with 1 <= m <= max_level,
/// compares every coface and codegeneracy of Z^{K_1} on the cobar basis
/// elements of internal degree <= max_degree with the cobar prediction.
Alpha1Report alpha1_pointwise_check(unsigned max_degree, std::size_t samples, std::uint64_t seed,
                                    unsigned max_level = 3);

}  // namespace binring

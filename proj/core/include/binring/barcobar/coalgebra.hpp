#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binring {

/// Connected graded coalgebra C = Z.1 + Cbar with Cbar free of finite rank in
/// internal degrees 1..d_max. The full diagonal is
/// Delta(c) = c (x) 1 + 1 (x) c + Dbar(c), so only the reduced diagonal is
/// stored. Basis of Cbar_p (x) Cbar_q uses index a * rank(q) + b.
class GradedCoalgebra {
 public:
  GradedCoalgebra() = default;
  /// `ranks[0]` must be 0. `blocks[d][p-1]` is the component
  /// Cbar_d -> Cbar_p (x) Cbar_{d-p} for 1 <= p <= d-1 (blocks[0], blocks[1]
  /// are empty).
  GradedCoalgebra(std::string name, std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> blocks);

  const std::string& name() const { return name_; }
  unsigned d_max() const { return static_cast<unsigned>(ranks_.size()) - 1; }
  std::size_t rank(unsigned d) const { return d < ranks_.size() ? ranks_[d] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Dbar component Cbar_d -> Cbar_p (x) Cbar_{d-p}.
  const IntMatrix& diagonal(unsigned d, unsigned p) const;

  /// Describes the first failure of reduced coassociativity, if any.
  std::optional<std::string> validate() const;
  bool cocommutative() const;

  GradedCoalgebra truncated(unsigned d_max) const;

 private:
  std::string name_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntMatrix>> blocks_;
};

/// Num[x] with basis binom(x, d) in degree d and the Vandermonde diagonal,
/// computed through NumPoly::diagonal.
GradedCoalgebra num_coalgebra(unsigned d_max);

/// Cbar = 0.
GradedCoalgebra trivial_coalgebra(unsigned d_max);

/// Cbar_d = Z e_d with Dbar(e_d) = sum_p binom(d, p) e_p (x) e_{d-p}.
GradedCoalgebra divided_type_coalgebra(unsigned d_max);

/// Num[x, y] (both variables of degree 1) or the tensor coalgebra on two
/// degree-1 generators, chosen by the seed, then conjugated by random
/// unimodular changes of basis in every degree. Always coassociative.
GradedCoalgebra random_coalgebra(unsigned d_max, std::uint64_t seed);

// {"name": ..., "ranks": [...], "diagonal": [[matrix for p = 1..d-1], ...]}
nlohmann::json to_json(const GradedCoalgebra& c);
GradedCoalgebra coalgebra_from_json(const nlohmann::json& j);

}  // namespace binring

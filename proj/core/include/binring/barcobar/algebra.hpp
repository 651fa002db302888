#pragma once

#include "binring/barcobar/coalgebra.hpp"
#include "binring/linalg/cochain_complex.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace binring {

/// Augmented algebra A = Z.1 + Abar with Abar free of finite rank in
/// internal degrees 1..d_max. Products land in degree p+q and are dropped
/// beyond d_max. Optionally differential graded: every basis element carries
/// a homological degree and d_A lowers it by one, preserving the internal
/// degree. Basis of Abar_p (x) Abar_q uses index a * rank(q) + b.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  /// `products` maps (p, q) to the matrix Abar_p (x) Abar_q -> Abar_{p+q};
  /// missing pairs are zero. Throws Error when ranks[0] != 0, since a
  /// degree-0 part would make every bidegree of the bar complex infinite.
  GradedAlgebra(std::string name, std::vector<std::size_t> ranks,
                std::map<std::pair<unsigned, unsigned>, IntMatrix> products);
  /// Differential graded form. `homological[d][k]` is the degree of basis
  /// element k of Abar_d; `differential[d]` is d_A on Abar_d.
  GradedAlgebra(std::string name, std::vector<std::size_t> ranks,
                std::map<std::pair<unsigned, unsigned>, IntMatrix> products,
                std::vector<std::vector<int>> homological, std::vector<IntMatrix> differential);

  const std::string& name() const { return name_; }
  unsigned d_max() const { return static_cast<unsigned>(ranks_.size()) - 1; }
  std::size_t rank(unsigned d) const { return d < ranks_.size() ? ranks_[d] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  IntMatrix product(unsigned p, unsigned q) const;
  bool is_dg() const { return dg_; }
  int homological_degree(unsigned d, std::size_t k) const;
  IntMatrix differential(unsigned d) const;

  /// Associativity, degree compatibility and, in the dg case, d^2 = 0, the
  /// Leibniz rule and homological degrees <= -1.
  std::optional<std::string> validate() const;

  /// Abar_d as a cochain complex (homological degree h in cochain degree -h).
  CochainComplex weight_complex(unsigned d) const;

  GradedAlgebra truncated(unsigned d_max) const;

 private:
  std::string name_;
  std::vector<std::size_t> ranks_;
  std::map<std::pair<unsigned, unsigned>, IntMatrix> products_;
  bool dg_ = false;
  std::vector<std::vector<int>> homological_;
  std::vector<IntMatrix> differential_;
};

/// Z[x], x in degree 1.
GradedAlgebra polynomial_algebra(unsigned d_max);
/// Z[x]/(x^k), x in degree 1.
GradedAlgebra truncated_polynomial_algebra(unsigned k, unsigned d_max);
/// Abar with the given ranks and zero multiplication.
GradedAlgebra square_zero_algebra(std::vector<std::size_t> ranks);
/// Graded dual: products are the transposed reduced diagonal blocks.
GradedAlgebra dual_algebra(const GradedCoalgebra& c);

/// Componentwise map Abar_d -> Abar'_d (rank(target) x rank(source)).
class AlgebraMap {
 public:
  /// Throws Error unless f respects products, degrees and differentials.
  AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<IntMatrix> components);

  const GradedAlgebra& source() const { return source_; }
  const GradedAlgebra& target() const { return target_; }
  const IntMatrix& component(unsigned d) const { return components_.at(d); }

 private:
  GradedAlgebra source_;
  GradedAlgebra target_;
  std::vector<IntMatrix> components_;
};

/// f on each weight complex Abar_d, d = 0..d_max, over a common degree range.
std::vector<ComplexMap> weight_maps(const AlgebraMap& f);

// {"name", "ranks", "products": [{"p", "q", "matrix"}], optional
//  "homological": [[...]], "differential": [matrix, ...]}
nlohmann::json to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace binring

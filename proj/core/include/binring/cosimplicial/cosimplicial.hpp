#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binring {

/// First failing identity found by validate(): its name, the degree of the
/// source object of the composite, and the index pair (i, j).
struct IdentityViolation {
  std::string identity;
  int degree = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string to_string() const;
};

/// Degreewise free cosimplicial abelian group truncated at degree T.
/// coface(m, i) : A^{m-1} -> A^m for 1 <= m <= T, 0 <= i <= m;
/// codegeneracy(m, i) : A^{m+1} -> A^m for 0 <= m < T, 0 <= i <= m.
class CosimplicialAbGroup {
 public:
  CosimplicialAbGroup() = default;
  /// cofaces[m-1] holds the m+1 cofaces into degree m; codegeneracies[m] the
  /// m+1 codegeneracies out of degree m+1. Shapes are checked; identities are
  /// left to validate().
  CosimplicialAbGroup(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> cofaces,
                      std::vector<std::vector<IntMatrix>> codegeneracies);

  int truncation() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int m) const { return ranks_.at(static_cast<std::size_t>(m)); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const IntMatrix& coface(int m, std::size_t i) const;
  const IntMatrix& codegeneracy(int m, std::size_t i) const;
  const std::vector<std::vector<IntMatrix>>& cofaces() const { return cofaces_; }
  const std::vector<std::vector<IntMatrix>>& codegeneracies() const { return codegeneracies_; }

  /// Replaces one structure map; used to inject faults in tests.
  void set_coface(int m, std::size_t i, IntMatrix value);

  /// Checks every cosimplicial identity whose composite stays inside [0, T].
  std::optional<IdentityViolation> validate() const;

  CosimplicialAbGroup truncated(int t) const;

  friend bool operator==(const CosimplicialAbGroup&, const CosimplicialAbGroup&) = default;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntMatrix>> cofaces_;
  std::vector<std::vector<IntMatrix>> codegeneracies_;
};

/// Degreewise free simplicial abelian group truncated at degree T.
/// face(m, i) : A_m -> A_{m-1} for 1 <= m <= T, 0 <= i <= m;
/// degeneracy(m, i) : A_m -> A_{m+1} for 0 <= m < T, 0 <= i <= m.
class SimplicialAbGroup {
 public:
  SimplicialAbGroup() = default;
  SimplicialAbGroup(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> faces,
                    std::vector<std::vector<IntMatrix>> degeneracies);

  int truncation() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int m) const { return ranks_.at(static_cast<std::size_t>(m)); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const IntMatrix& face(int m, std::size_t i) const;
  const IntMatrix& degeneracy(int m, std::size_t i) const;
  const std::vector<std::vector<IntMatrix>>& faces() const { return faces_; }
  const std::vector<std::vector<IntMatrix>>& degeneracies() const { return degeneracies_; }

  std::optional<IdentityViolation> validate() const;

  friend bool operator==(const SimplicialAbGroup&, const SimplicialAbGroup&) = default;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntMatrix>> faces_;
  std::vector<std::vector<IntMatrix>> degeneracies_;
};

/// Hom(-, Z) degreewise: transposes every structure map.
CosimplicialAbGroup dual(const SimplicialAbGroup& a);
SimplicialAbGroup dual(const CosimplicialAbGroup& a);

}  // namespace binring

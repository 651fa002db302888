#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <vector>

namespace binring {

/// Bounded cochain complex of finitely generated free abelian groups in
/// degrees [lo, hi]. d^n maps degree n to n+1 and is stored as a
/// rank(n+1) x rank(n) matrix.
class CochainComplex {
 public:
  CochainComplex() = default;
  /// `differentials[k]` is d^{lo+k}; it must have ranks.size()-1 entries (an
  /// empty vector means all differentials vanish). Throws Error on shape
  /// mismatch or when d∘d != 0.
  CochainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const { return ranks_.empty(); }
  std::size_t rank(int n) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d^n; a zero matrix of the right shape outside the stored range.
  IntMatrix differential(int n) const;

  /// Largest degree range [lo, hi] restricted to degrees in [from, to].
  CochainComplex truncated(int from, int to) const;

  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

 private:
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> diffs_;
};

/// Degreewise components f^n : C^n -> D^n of a cochain map.
class ComplexMap {
 public:
  /// Source and target must share the degree range. Throws Error on shape
  /// mismatch or when the components do not commute with the differentials.
  ComplexMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components);

  static ComplexMap identity(const CochainComplex& c);

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }
  const IntMatrix& component(int n) const;

 private:
  CochainComplex source_;
  CochainComplex target_;
  std::vector<IntMatrix> components_;
};

/// cone(f)^n = C^{n+1} + D^n, d(c, e) = (-d_C c, f c + d_D e).
CochainComplex mapping_cone(const ComplexMap& f);

/// The same complex viewed on [lo, hi] (which must contain its range), with
/// zero groups added.
CochainComplex extend_range(const CochainComplex& c, int lo, int hi);

CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b);

/// (A (x) B)^n = sum_{p+q=n} A^p (x) B^q with d(a (x) b) = da (x) b + (-1)^p a (x) db.
/// Basis in each degree: blocks by increasing p, Kronecker order inside a block.
CochainComplex tensor_product(const CochainComplex& a, const CochainComplex& b);

}  // namespace binring

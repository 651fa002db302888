#pragma once

#include "binring/binomial/multi_index.hpp"
#include "binring/linalg/cohomology.hpp"
#include "binring/linalg/int_matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace binring {

/// Finite divisor-closed set of positive integers.
class TruncationSet {
 public:
  /// Throws Error unless every divisor of every element is present.
  explicit TruncationSet(std::vector<unsigned long> elements);
  /// {1, p, ..., p^(k-1)}.
  static TruncationSet p_typical(unsigned long p, unsigned k);
  /// {1, ..., n}.
  static TruncationSet first(unsigned long n);

  const std::vector<unsigned long>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(unsigned long n) const;
  std::size_t index_of(unsigned long n) const;
  /// {n : n*m in S}, the truncation that F_m lands in.
  TruncationSet divided_by(unsigned long m) const;

  friend bool operator==(const TruncationSet&, const TruncationSet&) = default;

 private:
  std::vector<unsigned long> elements_;
};

/// Z (modulus 0) or Z/N.
class BaseRing {
 public:
  static BaseRing integers() { return BaseRing(0); }
  static BaseRing modulo(const Integer& n);
  static BaseRing prime_field(unsigned long p);

  const Integer& modulus() const { return modulus_; }
  bool torsion_free() const { return modulus_ == 0; }
  Integer reduce(const Integer& x) const;
  std::string name() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

 private:
  explicit BaseRing(Integer m) : modulus_(std::move(m)) {}
  Integer modulus_;
};

class WittVector {
 public:
  WittVector(TruncationSet s, BaseRing base, std::vector<Integer> components);
  static WittVector zero(const TruncationSet& s, const BaseRing& base);
  /// Multiplicative unit (1, 0, 0, ...).
  static WittVector one(const TruncationSet& s, const BaseRing& base);

  const TruncationSet& truncation() const { return truncation_; }
  const BaseRing& base() const { return base_; }
  const std::vector<Integer>& components() const { return components_; }
  const Integer& component(unsigned long n) const { return components_[truncation_.index_of(n)]; }

  /// Restriction to a smaller divisor-closed subset.
  WittVector restrict_to(const TruncationSet& sub) const;

  friend bool operator==(const WittVector&, const WittVector&) = default;

 private:
  TruncationSet truncation_;
  BaseRing base_;
  std::vector<Integer> components_;
};

/// ghost_n(w) = sum_{d | n} d * w_d^{n/d}. Requires a torsion-free base.
std::map<unsigned long, Integer> ghost_map(const WittVector& w);

/// Integer polynomial in 2|S| variables (u_s for s in S, then v_s), stored as
/// (exponents, coefficient) pairs.
struct IntPolynomial {
  std::vector<std::pair<MultiIndex, Integer>> terms;
  Integer evaluate(const std::vector<Integer>& vars) const;
};

/// Universal integral polynomials for a truncation set, obtained by inverting
/// the ghost map over Q and checking integrality once.
struct WittPolynomials {
  TruncationSet truncation;
  std::vector<IntPolynomial> sum;
  std::vector<IntPolynomial> product;
  /// frobenius[m][i] gives component i of F_m(u) over S/m; only for primes m
  /// with S/m nonempty. Polynomials use the u variables only.
  std::map<unsigned long, std::vector<IntPolynomial>> frobenius;
};

/// Cached per truncation set; concurrent callers share one construction.
std::shared_ptr<const WittPolynomials> witt_polynomials(const TruncationSet& s);

WittVector witt_add(const WittVector& u, const WittVector& v);
WittVector witt_mul(const WittVector& u, const WittVector& v);

/// F_m, characterized by ghost_n(F_m w) = ghost_{nm}(w) and defined over any
/// base through the integral polynomials. Lands in S/m. m must be prime.
WittVector frobenius(const WittVector& w, unsigned long m);

/// True when F_l(w) equals the restriction of w to S/l for every prime l.
bool is_frobenius_fixed(const WittVector& w);

struct FixedPointReport {
  unsigned long p = 0;
  unsigned k = 0;
  std::size_t total_elements = 0;
  std::size_t fixed_elements = 0;
  /// Additive group of the fixed subring in invariant-factor form.
  CohomologyGroup additive_structure;
  /// Additive order of the unit (1, 0, ...).
  Integer order_of_one;
  bool closed_under_operations = false;
  bool cyclic() const { return additive_structure.free_rank == 0 && additive_structure.torsion.size() <= 1; }
};

/// Enumerates W_S(F_p) for S = {1, p, ..., p^(k-1)} and describes the subring
/// fixed by all Frobenius operators.
FixedPointReport frobenius_fixed_points(unsigned long p, unsigned k);

}  // namespace binring

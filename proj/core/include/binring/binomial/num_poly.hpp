#pragma once

#include "binring/binomial/multi_index.hpp"
#include "binring/binomial/rat_poly.hpp"
#include "binring/error.hpp"
#include "binring/linalg/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace binring {

/// Numerical polynomial sum_alpha c_alpha prod_j binom(x_j, alpha_j) with
/// integer coefficients in the binomial (Mahler) basis. Integer values on
/// integer points hold by construction.
class NumPoly {
 public:
  using Terms = std::map<MultiIndex, Integer, GradedLex>;

  explicit NumPoly(std::size_t num_vars = 1) : num_vars_(num_vars) {}

  static NumPoly constant(std::size_t num_vars, const Integer& c);
  /// c * prod_j binom(x_j, alpha_j).
  static NumPoly basis(MultiIndex alpha, const Integer& c = 1);
  /// x_j = binom(x_j, 1).
  static NumPoly variable(std::size_t num_vars, std::size_t j);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, const Integer& c);

  NumPoly pow(unsigned e) const;

  NumPoly& operator+=(const NumPoly& o);
  NumPoly& operator-=(const NumPoly& o);
  NumPoly& operator*=(const Integer& s);
  friend NumPoly operator+(NumPoly a, const NumPoly& b) { return a += b; }
  friend NumPoly operator-(NumPoly a, const NumPoly& b) { return a -= b; }
  friend NumPoly operator*(NumPoly a, const Integer& s) { return a *= s; }
  friend NumPoly operator*(const NumPoly& a, const NumPoly& b);
  friend bool operator==(const NumPoly& a, const NumPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const NumPoly& o) const;

  std::size_t num_vars_;
  Terms terms_;
};

/// A rational polynomial that is not integer valued on Z^k. `alpha` is the
/// first (graded-lex) Mahler index whose coefficient is not an integer.
class NotNumerical : public Error {
 public:
  NotNumerical(MultiIndex alpha, Rational value);
  const MultiIndex& alpha() const { return alpha_; }
  const Rational& value() const { return value_; }

 private:
  MultiIndex alpha_;
  Rational value_;
};

/// Expands each binom(x_j, n) as x_j (x_j - 1) ... (x_j - n + 1) / n!.
RatPoly to_rational(const NumPoly& f);

/// Mahler coefficients (Delta^alpha f)(0) by iterated forward differences on
/// the grid prod_j [0, deg_j f]. Throws NotNumerical when one is fractional.
NumPoly from_rational(const RatPoly& f);

NumPoly multiply(const NumPoly& f, const NumPoly& g);

/// binom(x, m) binom(x, n) = sum_k (m+n-k)! / (k! (m-k)! (n-k)!) binom(x, m+n-k).
NumPoly multiply_basis_univariate(unsigned m, unsigned n);

Integer evaluate(const NumPoly& f, std::span<const Integer> point);

/// Delta f (x, y) = f(x + y) for a one-variable f, via Vandermonde:
/// binom(x+y, n) = sum_{p+q=n} binom(x, p) binom(y, q).
NumPoly diagonal(const NumPoly& f);

/// Applies the diagonal to variable j: x_j -> x_j + x_{j+1}, shifting later
/// variables up by one.
NumPoly diagonal_at(const NumPoly& f, std::size_t j);

/// Counit on variable j: sets x_j = 0 and removes the variable.
NumPoly counit_at(const NumPoly& f, std::size_t j);

/// Inserts a fresh variable at position j on which f does not depend.
NumPoly insert_variable(const NumPoly& f, std::size_t j);

/// Renames variables: variable i of f becomes variable perm[i].
NumPoly permute_variables(const NumPoly& f, std::span<const std::size_t> perm);

/// (f^p - f) / p, computed exactly in the Mahler basis. Throws Error when p is
/// not prime.
NumPoly frobenius_quotient(const NumPoly& f, unsigned long p);

struct InternalDegree {
  unsigned value = 0;
  /// Set for the zero polynomial, whose degree is reported as 0.
  bool zero_polynomial = false;
};

/// max |alpha| over the terms; binom(x, n) has degree n.
InternalDegree internal_degree(const NumPoly& f);

/// Renders "3*binom(x,2) + binom(x,1)*binom(y,1)". Default names are x, y, z,
/// then x4, x5, ...
std::string to_string(const NumPoly& f, const std::vector<std::string>& names = {});

/// {"vars": k, "terms": [[[alpha...], "coeff"], ...]} in graded-lex order.
nlohmann::json to_json(const NumPoly& f);
NumPoly num_poly_from_json(const nlohmann::json& j);

}  // namespace binring

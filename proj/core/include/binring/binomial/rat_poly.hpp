#pragma once

#include "binring/binomial/multi_index.hpp"
#include "binring/linalg/int_matrix.hpp"

#include <map>
#include <span>
#include <string>

namespace binring {

/// Polynomial with rational coefficients in the monomial basis
/// prod_j x_j^{alpha_j}.
class RatPoly {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedLex>;

  explicit RatPoly(std::size_t num_vars = 1) : num_vars_(num_vars) {}

  static RatPoly constant(std::size_t num_vars, const Rational& c);
  static RatPoly monomial(MultiIndex exponents, const Rational& c = 1);
  static RatPoly variable(std::size_t num_vars, std::size_t j);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, const Rational& c);
  /// Largest exponent of variable j.
  unsigned degree_in(std::size_t j) const;
  bool has_integer_coefficients() const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const Integer> point) const;

  RatPoly pow(unsigned e) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_vars(const RatPoly& o) const;

  std::size_t num_vars_;
  Terms terms_;
};

}  // namespace binring

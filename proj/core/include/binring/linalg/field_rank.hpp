#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <string>

namespace binring {

/// Coefficient field for base change: Q or F_p.
class Coefficients {
 public:
  static Coefficients rationals() { return Coefficients(0); }
  /// Throws Error when p is not prime.
  static Coefficients prime_field(unsigned long p);

  bool is_rational() const { return characteristic_ == 0; }
  unsigned long characteristic() const { return characteristic_; }
  std::string name() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(unsigned long p) : characteristic_(p) {}
  unsigned long characteristic_;
};

/// Rank of the reduction of `a` to the given field. Gaussian elimination over
/// the field itself (mod-p arithmetic or exact rationals), independent of the
/// Smith normal form code.
std::size_t rank_over(const IntMatrix& a, const Coefficients& field);

}  // namespace binring

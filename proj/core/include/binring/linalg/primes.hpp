#pragma once

#include "binring/linalg/int_matrix.hpp"

#include <vector>

namespace binring {

bool is_prime(unsigned long n);

/// Distinct prime divisors of |n| in increasing order (empty for 0 and +-1).
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace binring

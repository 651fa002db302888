#pragma once

#include "binring/linalg/cochain_complex.hpp"

#include <cstdint>
#include <random>

namespace binring {

/// Entries uniform in [-bound, bound], each kept with probability `density`.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound, double density);

/// Small complex in degrees 0..3 whose cohomology is known by construction:
/// free summands plus pieces Z --k--> Z (k in 1..5), hidden by random
/// unimodular changes of basis in every degree.
CochainComplex random_complex(std::mt19937_64& rng);
CochainComplex random_complex(std::uint64_t seed);

}  // namespace binring

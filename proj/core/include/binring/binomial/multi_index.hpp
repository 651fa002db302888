#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace binring {

using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

/// Graded-lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

std::string to_string(const MultiIndex& a);

}  // namespace binring

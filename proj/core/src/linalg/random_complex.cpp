#include "binring/linalg/random_complex.hpp"

namespace binring {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound, double density) {
  std::uniform_int_distribution<int> value(-bound, bound);
  std::bernoulli_distribution keep(density);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.set(r, c, value(rng));
  return m;
}

CochainComplex random_complex(std::mt19937_64& rng) {
  constexpr int len = 4;
  std::uniform_int_distribution<int> pieces(0, 3), mult(1, 5), coin(0, 1), coeff(-2, 2), kind(0, 2);
  // Kind 0 is acyclic over Z, kind 1 acyclic over Q only (unless every
  // multiplier comes out 1), kind 2 anything.
  const int k = kind(rng);
  std::vector<std::vector<int>> arrows(len - 1);  // multipliers from degree n to n+1
  std::vector<std::size_t> free(len);
  if (k == 2)
    for (auto& f : free) f = static_cast<std::size_t>(coin(rng));
  for (auto& a : arrows)
    for (int i = pieces(rng); i > 0; --i) a.push_back(k == 0 ? 1 : mult(rng));
  std::vector<std::size_t> ranks(len);
  for (int n = 0; n < len; ++n) {
    ranks[n] = free[n];
    if (n > 0) ranks[n] += arrows[n - 1].size();
    if (n + 1 < len) ranks[n] += arrows[n].size();
  }
  // Basis of degree n: free part, then targets of arrows n-1, then sources of
  // arrows n.
  std::vector<IntMatrix> d;
  for (int n = 0; n + 1 < len; ++n) {
    IntMatrix m(ranks[n + 1], ranks[n]);
    const std::size_t src0 = free[n] + (n > 0 ? arrows[n - 1].size() : 0);
    for (std::size_t i = 0; i < arrows[n].size(); ++i) m.set(free[n + 1] + i, src0 + i, arrows[n][i]);
    d.push_back(std::move(m));
  }
  // g_n is a product of elementary matrices E = I + c e_ij, ginv_n the
  // product of their inverses in reverse order.
  std::vector<IntMatrix> g, ginv;
  for (int n = 0; n < len; ++n) {
    IntMatrix a = IntMatrix::identity(ranks[n]), b = IntMatrix::identity(ranks[n]);
    if (ranks[n] >= 2) {
      std::uniform_int_distribution<std::size_t> idx(0, ranks[n] - 1);
      for (int t = 0; t < 6; ++t) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const Integer c = coeff(rng);
        a.add_row_multiple(i, j, c);
        IntMatrix inv = IntMatrix::identity(ranks[n]);
        inv.set(i, j, -c);
        b = b * inv;
      }
    }
    g.push_back(std::move(a));
    ginv.push_back(std::move(b));
  }
  for (int n = 0; n + 1 < len; ++n) d[n] = g[n + 1] * d[n] * ginv[n];
  return CochainComplex(0, ranks, d);
}

CochainComplex random_complex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_complex(rng);
}

}  // namespace binring

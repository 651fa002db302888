#include "binring/barcobar/coalgebra.hpp"

#include "binring/binomial/num_poly.hpp"
#include "binring/error.hpp"
#include "binring/linalg/complex_io.hpp"

#include <random>

namespace binring {

GradedCoalgebra::GradedCoalgebra(std::string name, std::vector<std::size_t> ranks,
                                 std::vector<std::vector<IntMatrix>> blocks)
    : name_(std::move(name)), ranks_(std::move(ranks)), blocks_(std::move(blocks)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (ranks_[0] != 0) throw Error("coalgebra: the reduced part must vanish in degree 0");
  blocks_.resize(ranks_.size());
  for (unsigned d = 0; d < ranks_.size(); ++d) {
    auto& level = blocks_[d];
    if (level.empty() && d >= 2)
      for (unsigned p = 1; p < d; ++p) level.emplace_back(ranks_[p] * ranks_[d - p], ranks_[d]);
    if (level.size() != (d >= 2 ? d - 1 : 0))
      throw Error("coalgebra: degree " + std::to_string(d) + " needs " + std::to_string(d >= 2 ? d - 1 : 0) +
                  " diagonal blocks");
    for (unsigned p = 1; p < d; ++p) {
      const IntMatrix& m = level[p - 1];
      if (m.rows() != ranks_[p] * ranks_[d - p] || m.cols() != ranks_[d])
        throw Error("coalgebra: diagonal block (" + std::to_string(d) + "," + std::to_string(p) +
                    ") has the wrong shape");
    }
  }
}

const IntMatrix& GradedCoalgebra::diagonal(unsigned d, unsigned p) const {
  if (d >= blocks_.size() || p < 1 || p >= d) throw Error("coalgebra: no diagonal block at that degree");
  return blocks_[d][p - 1];
}

std::optional<std::string> GradedCoalgebra::validate() const {
  for (unsigned d = 3; d <= d_max(); ++d)
    for (unsigned p = 1; p + 2 <= d; ++p)
      for (unsigned q = 1; p + q + 1 <= d; ++q) {
        const unsigned r = d - p - q;
        IntMatrix left = IntMatrix::kronecker(diagonal(p + q, p), IntMatrix::identity(rank(r))) * diagonal(d, p + q);
        IntMatrix right = IntMatrix::kronecker(IntMatrix::identity(rank(p)), diagonal(q + r, q)) * diagonal(d, p);
        if (!(left == right))
          return "coassociativity fails in degree " + std::to_string(d) + " on the (" + std::to_string(p) + "," +
                 std::to_string(q) + "," + std::to_string(r) + ") component";
      }
  return std::nullopt;
}

bool GradedCoalgebra::cocommutative() const {
  for (unsigned d = 2; d <= d_max(); ++d)
    for (unsigned p = 1; p < d; ++p) {
      const unsigned q = d - p;
      IntMatrix swap(rank(p) * rank(q), rank(q) * rank(p));
      for (std::size_t a = 0; a < rank(p); ++a)
        for (std::size_t b = 0; b < rank(q); ++b) swap.set(a * rank(q) + b, b * rank(p) + a, 1);
      if (!(diagonal(d, p) == swap * diagonal(d, q))) return false;
    }
  return true;
}

GradedCoalgebra GradedCoalgebra::truncated(unsigned d) const {
  if (d > d_max()) throw Error("coalgebra: cannot truncate above its top degree");
  return GradedCoalgebra(name_, {ranks_.begin(), ranks_.begin() + d + 1}, {blocks_.begin(), blocks_.begin() + d + 1});
}

GradedCoalgebra num_coalgebra(unsigned d_max) {
  std::vector<std::size_t> ranks(d_max + 1, 1);
  ranks[0] = 0;
  std::vector<std::vector<IntMatrix>> blocks(d_max + 1);
  for (unsigned d = 2; d <= d_max; ++d) {
    const NumPoly delta = diagonal(NumPoly::basis({d}));
    for (unsigned p = 1; p < d; ++p) {
      IntMatrix m(1, 1);
      m.set(0, 0, delta.coefficient({p, d - p}));
      blocks[d].push_back(m);
    }
  }
  return GradedCoalgebra("num", std::move(ranks), std::move(blocks));
}

GradedCoalgebra trivial_coalgebra(unsigned d_max) {
  return GradedCoalgebra("trivial", std::vector<std::size_t>(d_max + 1, 0), {});
}

GradedCoalgebra divided_type_coalgebra(unsigned d_max) {
  std::vector<std::size_t> ranks(d_max + 1, 1);
  ranks[0] = 0;
  std::vector<std::vector<IntMatrix>> blocks(d_max + 1);
  for (unsigned d = 2; d <= d_max; ++d)
    for (unsigned p = 1; p < d; ++p) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), d, p);
      IntMatrix m(1, 1);
      m.set(0, 0, c);
      blocks[d].push_back(m);
    }
  return GradedCoalgebra("divided", std::move(ranks), std::move(blocks));
}

namespace {

// Num[x, y] with basis binom(x, a) binom(y, d - a), a = 0..d, in degree d.
GradedCoalgebra num_two_variables(unsigned d_max) {
  std::vector<std::size_t> ranks(d_max + 1);
  for (unsigned d = 1; d <= d_max; ++d) ranks[d] = d + 1;
  std::vector<std::vector<IntMatrix>> blocks(d_max + 1);
  const std::size_t perm[] = {0, 2, 1, 3};  // (x1, x2, y1, y2) -> (x1, y1, x2, y2)
  for (unsigned d = 2; d <= d_max; ++d) {
    for (unsigned p = 1; p < d; ++p) blocks[d].emplace_back(ranks[p] * ranks[d - p], ranks[d]);
    for (unsigned a = 0; a <= d; ++a) {
      NumPoly f = NumPoly::basis({a, d - a});
      NumPoly split = permute_variables(diagonal_at(diagonal_at(f, 0), 2), perm);
      for (const auto& [alpha, c] : split.terms()) {
        const unsigned left = alpha[0] + alpha[1], right = alpha[2] + alpha[3];
        if (left == 0 || right == 0) continue;
        const std::size_t row = alpha[0] * ranks[right] + alpha[2];
        blocks[d][left - 1].add_to(row, a, c);
      }
    }
  }
  return GradedCoalgebra("num2", std::move(ranks), std::move(blocks));
}

// Deconcatenation on words in two letters of degree 1, word w <-> binary index.
GradedCoalgebra tensor_coalgebra(unsigned d_max) {
  std::vector<std::size_t> ranks(d_max + 1);
  for (unsigned d = 1; d <= d_max; ++d) ranks[d] = std::size_t{1} << d;
  std::vector<std::vector<IntMatrix>> blocks(d_max + 1);
  for (unsigned d = 2; d <= d_max; ++d)
    for (unsigned p = 1; p < d; ++p) {
      IntMatrix m(ranks[p] * ranks[d - p], ranks[d]);
      for (std::size_t w = 0; w < ranks[d]; ++w) {
        const std::size_t head = w >> (d - p), tail = w & ((std::size_t{1} << (d - p)) - 1);
        m.set(head * ranks[d - p] + tail, w, 1);
      }
      blocks[d].push_back(m);
    }
  return GradedCoalgebra("tensor2", std::move(ranks), std::move(blocks));
}

// Random g with integer inverse h, as products of elementary matrices.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n, 0)), h = g;
  for (std::size_t i = 0; i < n; ++i) g[i][i] = h[i][i] = 1;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t t = 0; t < 3 * n; ++t) {
      const std::size_t i = idx(rng), j = idx(rng);
      const int c = coeff(rng);
      if (i == j || c == 0) continue;
      // g <- (I + c e_ij) g, h <- h (I - c e_ij)
      for (std::size_t k = 0; k < n; ++k) g[i][k] += c * g[j][k];
      for (std::size_t k = 0; k < n; ++k) h[k][j] -= c * h[k][i];
    }
  }
  return {IntMatrix::from_dense(g), IntMatrix::from_dense(h)};
}

}  // namespace

GradedCoalgebra random_coalgebra(unsigned d_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GradedCoalgebra base = (rng() & 1) ? tensor_coalgebra(d_max) : num_two_variables(d_max);
  std::vector<IntMatrix> g(d_max + 1), h(d_max + 1);
  for (unsigned d = 0; d <= d_max; ++d) std::tie(g[d], h[d]) = random_unimodular(base.rank(d), rng);
  std::vector<std::vector<IntMatrix>> blocks(d_max + 1);
  for (unsigned d = 2; d <= d_max; ++d)
    for (unsigned p = 1; p < d; ++p)
      blocks[d].push_back(IntMatrix::kronecker(g[p], g[d - p]) * base.diagonal(d, p) * h[d]);
  return GradedCoalgebra("random-" + base.name() + "-" + std::to_string(seed), base.ranks(), std::move(blocks));
}

nlohmann::json to_json(const GradedCoalgebra& c) {
  nlohmann::json blocks = nlohmann::json::array();
  for (unsigned d = 0; d <= c.d_max(); ++d) {
    nlohmann::json level = nlohmann::json::array();
    for (unsigned p = 1; p < d; ++p) level.push_back(to_json(c.diagonal(d, p)));
    blocks.push_back(std::move(level));
  }
  return {{"name", c.name()}, {"ranks", c.ranks()}, {"diagonal", blocks}};
}

GradedCoalgebra coalgebra_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<IntMatrix>> blocks;
    if (j.contains("diagonal"))
      for (const auto& level : j.at("diagonal")) {
        auto& row = blocks.emplace_back();
        for (const auto& m : level) row.push_back(matrix_from_json(m));
      }
    return GradedCoalgebra(j.value("name", std::string("file")), j.at("ranks").get<std::vector<std::size_t>>(),
                           std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("coalgebra JSON: ") + e.what());
  }
}

}  // namespace binring

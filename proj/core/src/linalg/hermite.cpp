#include "binring/linalg/hermite.hpp"

#include "binring/error.hpp"

namespace binring {

HermiteForm hermite_row_form(const IntMatrix& a) {
  IntMatrix m = a;
  HermiteForm out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols() && k < m.rows(); ++c) {
    // Euclid down the column until a single nonzero remains in rows >= k.
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t r = k; r < m.rows(); ++r) {
        Integer v = m.at(r, c);
        if (v != 0 && (best == m.rows() || cmpabs(v, m.at(best, c)) < 0)) best = r;
      }
      if (best == m.rows()) break;
      const Integer p = m.at(best, c);
      bool others = false;
      for (std::size_t r = k; r < m.rows(); ++r) {
        if (r == best) continue;
        Integer v = m.at(r, c);
        if (v == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        m.add_row_multiple(r, best, -q);
        if (m.at(r, c) != 0) others = true;
      }
      if (!others) {
        m.swap_rows(k, best);
        if (m.at(k, c) < 0) m.negate_row(k);
        const Integer pivot = m.at(k, c);
        for (std::size_t r = 0; r < k; ++r) {
          Integer v = m.at(r, c);
          if (v == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
          m.add_row_multiple(r, k, -q);
        }
        out.pivot_columns.push_back(c);
        ++k;
        break;
      }
    }
  }
  std::vector<std::size_t> keep(k);
  for (std::size_t i = 0; i < k; ++i) keep[i] = i;
  out.basis = m.select_rows(keep);
  return out;
}

std::optional<std::vector<Integer>> lattice_coordinates(const HermiteForm& h,
                                                        const std::vector<Integer>& v) {
  if (v.size() != h.basis.cols()) throw Error("lattice_coordinates: dimension mismatch");
  std::vector<Integer> residual = v;
  std::vector<Integer> coords(h.basis.rows(), 0);
  for (std::size_t i = 0; i < h.basis.rows(); ++i) {
    const std::size_t c = h.pivot_columns[i];
    const Integer pivot = h.basis.at(i, c);
    if (residual[c] % pivot != 0) return std::nullopt;
    coords[i] = residual[c] / pivot;
    if (coords[i] != 0)
      for (const auto& [col, x] : h.basis.row(i)) residual[col] -= coords[i] * x;
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace binring

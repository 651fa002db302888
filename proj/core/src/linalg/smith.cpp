#include "binring/linalg/smith.hpp"

#include "binring/error.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

namespace binring {
namespace {

// Quotient q minimizing |a - q*b|.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer twice_r = 2 * abs(r);
  if (twice_r > abs(b)) q += 1;  // r and b share a sign under floor division
  return q;
}

// Working storage for elimination. Both back ends expose the same interface;
// only active (not yet pivoted) rows and columns are searched.
class SparseWork {
 public:
  explicit SparseWork(const IntMatrix& a)
      : rows_(a.rows()), cols_(a.cols()), data_(a.rows()), col_rows_(a.cols()),
        row_active_(a.rows(), true), col_active_(a.cols(), true) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : a.row(r)) {
        data_[r].emplace(c, v);
        col_rows_[c].insert(r);
      }
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const Integer* best_value = nullptr;
    std::size_t best_cost = 0;
    // Once a unit is in hand only the fill-in estimate can improve; a short
    // look-ahead is enough and keeps each search from scanning every entry.
    std::size_t look_ahead = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_active_[r]) continue;
      if (best_value && abs(*best_value) == 1 && ++look_ahead > 32) break;
      for (const auto& [c, v] : data_[r]) {
        if (!col_active_[c]) continue;
        std::size_t cost = data_[r].size() * col_rows_[c].size();
        int cmp = best_value ? cmpabs(v, *best_value) : -1;
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          best = {r, c};
          best_value = &v;
          best_cost = cost;
          // A unit alone in its row or column eliminates without fill-in.
          if (abs(v) == 1 && (data_[r].size() == 1 || col_rows_[c].size() == 1)) return best;
        }
      }
    }
    return best;
  }

  Integer value(std::size_t r, std::size_t c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Integer(0) : it->second;
  }

  std::vector<std::pair<std::size_t, Integer>> column(std::size_t c) const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (std::size_t r : col_rows_[c])
      if (row_active_[r]) out.emplace_back(r, data_[r].at(c));
    return out;
  }

  std::vector<std::pair<std::size_t, Integer>> row(std::size_t r) const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (const auto& [c, v] : data_[r])
      if (col_active_[c]) out.emplace_back(c, v);
    return out;
  }

  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (const auto& [c, v] : data_[src]) bump(dst, c, q * v);
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    std::vector<std::size_t> touched(col_rows_[src].begin(), col_rows_[src].end());
    for (std::size_t r : touched) bump(r, dst, q * data_[r].at(src));
  }

  // After elimination the pivot is alone in its row and column, so both can
  // be dropped from storage.
  void deactivate(std::size_t r, std::size_t c) {
    row_active_[r] = false;
    col_active_[c] = false;
    data_[r].clear();
    col_rows_[c].clear();
  }

 private:
  void bump(std::size_t r, std::size_t c, const Integer& delta) {
    if (delta == 0) return;
    auto [it, inserted] = data_[r].try_emplace(c, delta);
    if (inserted) {
      col_rows_[c].insert(r);
      return;
    }
    it->second += delta;
    if (it->second == 0) {
      data_[r].erase(it);
      col_rows_[c].erase(r);
    }
  }

  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, Integer>> data_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::vector<bool> row_active_, col_active_;
};

class DenseWork {
 public:
  explicit DenseWork(const IntMatrix& a)
      : rows_(a.rows()), cols_(a.cols()), data_(a.rows() * a.cols()),
        row_active_(a.rows(), true), col_active_(a.cols(), true) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : a.row(r)) at(r, c) = v;
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_active_[r]) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!col_active_[c]) continue;
        const Integer& v = at(r, c);
        if (v == 0) continue;
        if (!best || cmpabs(v, at(best->first, best->second)) < 0) best = {r, c};
      }
    }
    return best;
  }

  Integer value(std::size_t r, std::size_t c) const { return at(r, c); }

  std::vector<std::pair<std::size_t, Integer>> column(std::size_t c) const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      if (row_active_[r] && at(r, c) != 0) out.emplace_back(r, at(r, c));
    return out;
  }

  std::vector<std::pair<std::size_t, Integer>> row(std::size_t r) const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (col_active_[c] && at(r, c) != 0) out.emplace_back(c, at(r, c));
    return out;
  }

  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(src, c) != 0) at(dst, c) += q * at(src, c);
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, src) != 0) at(r, dst) += q * at(r, src);
  }

  void deactivate(std::size_t r, std::size_t c) {
    row_active_[r] = false;
    col_active_[c] = false;
  }

 private:
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows_, cols_;
  std::vector<Integer> data_;
  std::vector<bool> row_active_, col_active_;
};

struct Pivot {
  std::size_t row, col;
  Integer value;
};

// Pivot on the entry of least absolute value; reduce its row and column by
// nearest-quotient division, moving the pivot whenever a smaller remainder
// appears. U accumulates row operations, Vt the column operations (as rows).
template <class Work>
std::vector<Pivot> eliminate(Work& w, IntMatrix* u, IntMatrix* vt) {
  std::vector<Pivot> pivots;
  while (auto start = w.min_pivot()) {
    auto [r, c] = *start;
    for (;;) {
      const Integer p = w.value(r, c);
      std::optional<std::pair<std::size_t, Integer>> smaller;
      for (const auto& [i, a] : w.column(c)) {
        if (i == r) continue;
        Integer q = nearest_quotient(a, p);
        w.add_row(i, r, -q);
        if (u) u->add_row_multiple(i, r, -q);
        Integer rem = a - q * p;
        if (rem != 0 && (!smaller || cmpabs(rem, smaller->second) < 0)) smaller = {i, rem};
      }
      if (smaller) {
        r = smaller->first;
        continue;
      }
      for (const auto& [j, a] : w.row(r)) {
        if (j == c) continue;
        Integer q = nearest_quotient(a, p);
        w.add_col(j, c, -q);
        if (vt) vt->add_row_multiple(j, c, -q);
        Integer rem = a - q * p;
        if (rem != 0 && (!smaller || cmpabs(rem, smaller->second) < 0)) smaller = {j, rem};
      }
      if (smaller) {
        c = smaller->first;
        continue;
      }
      break;
    }
    pivots.push_back({r, c, w.value(r, c)});
    w.deactivate(r, c);
  }
  return pivots;
}

std::vector<std::size_t> pivot_order(std::size_t n, const std::vector<std::size_t>& leading) {
  std::vector<std::size_t> order = leading;
  std::vector<bool> used(n, false);
  for (std::size_t i : leading) used[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) order.push_back(i);
  return order;
}

SmithDecomposition decompose(const IntMatrix& a, const SmithOptions& options) {
  const bool track = options.transforms;
  IntMatrix u = track ? IntMatrix::identity(a.rows()) : IntMatrix();
  IntMatrix vt = track ? IntMatrix::identity(a.cols()) : IntMatrix();

  std::vector<Pivot> pivots;
  const bool dense = !options.force_sparse && a.rows() <= options.dense_threshold &&
                     a.cols() <= options.dense_threshold;
  if (dense) {
    DenseWork w(a);
    pivots = eliminate(w, track ? &u : nullptr, track ? &vt : nullptr);
  } else {
    SparseWork w(a);
    pivots = eliminate(w, track ? &u : nullptr, track ? &vt : nullptr);
  }

  std::vector<Integer> diag;
  std::vector<std::size_t> prow, pcol;
  for (const auto& p : pivots) {
    diag.push_back(p.value);
    prow.push_back(p.row);
    pcol.push_back(p.col);
  }
  if (track) {
    auto rorder = pivot_order(a.rows(), prow);
    auto corder = pivot_order(a.cols(), pcol);
    u = u.select_rows(rorder);
    vt = vt.select_rows(corder);
  }

  for (std::size_t k = 0; k < diag.size(); ++k) {
    if (diag[k] < 0) {
      diag[k] = -diag[k];
      if (track) u.negate_row(k);
    }
  }

  // Enforce d_i | d_j with the 2x2 unimodular pair
  //   L = [s t; -b/g a/g],  R = [1 -t*b/g; 1 s*a/g],  L diag(a,b) R = diag(g, ab/g).
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer a_ = diag[i], b_ = diag[j];
      if (b_ % a_ == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
      const Integer bg = b_ / g, ag = a_ / g;
      if (track) {
        u.combine_rows(i, j, s, t, -bg, ag);
        vt.combine_rows(i, j, Integer(1), Integer(1), -t * bg, s * ag);
      }
      diag[i] = g;
      diag[j] = a_ * bg;
    }
  }

  SmithDecomposition out;
  out.D = IntMatrix::diagonal(a.rows(), a.cols(), diag);
  out.invariants = std::move(diag);
  if (track) {
    out.U = std::move(u);
    out.V = vt.transpose();
  }
  return out;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a, const SmithOptions& options) {
  return decompose(a, options);
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  SmithOptions options;
  options.transforms = false;
  return decompose(a, options).invariants;
}

std::size_t integer_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

bool verify_smith(const IntMatrix& a, const SmithDecomposition& s) {
  if (s.U.rows() != a.rows() || s.U.cols() != a.rows()) return false;
  if (s.V.rows() != a.cols() || s.V.cols() != a.cols()) return false;
  if (s.U * a * s.V != s.D) return false;
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (const auto& [c, v] : s.D.row(r))
      if (r != c || v <= 0) return false;
  for (std::size_t i = 0; i < s.invariants.size(); ++i) {
    if (s.D.at(i, i) != s.invariants[i]) return false;
    if (i + 1 < s.invariants.size() && s.invariants[i + 1] % s.invariants[i] != 0) return false;
  }
  auto unimodular = [](const IntMatrix& m) {
    auto inv = invariant_factors(m);
    return inv.size() == m.rows() && std::all_of(inv.begin(), inv.end(), [](const Integer& x) { return x == 1; });
  };
  return unimodular(s.U) && unimodular(s.V);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.cols() == 0) return IntMatrix(0, 0);
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  auto s = smith_normal_form(a);
  const std::size_t r = s.rank();
  IntMatrix k(a.cols(), a.cols() - r);
  for (std::size_t row = 0; row < a.cols(); ++row)
    for (const auto& [c, v] : s.V.row(row))
      if (c >= r) k.set(row, c - r, v);
  return k;
}

}  // namespace binring

#include "binring/barcobar/cobar.hpp"

#include "binring/error.hpp"

#include <map>

namespace binring {

namespace {

void compositions(unsigned n, unsigned d, unsigned min_part, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() == n) {
    if (d == 0) out.push_back(prefix);
    return;
  }
  const unsigned left = n - static_cast<unsigned>(prefix.size()) - 1;
  for (unsigned p = min_part; p <= d; ++p) {
    if (d - p < left * min_part) break;
    prefix.push_back(p);
    compositions(n, d - p, min_part, prefix, out);
    prefix.pop_back();
  }
}

using WordIndex = std::map<TensorWord, std::size_t>;

WordIndex index_words(const std::vector<TensorWord>& words) {
  WordIndex index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);
  return index;
}

// Column access to a matrix: for each column, its (row, value) entries.
using Columns = std::vector<std::vector<std::pair<std::size_t, Integer>>>;

Columns columns_of(const IntMatrix& m) {
  Columns cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) cols[c].emplace_back(r, v);
  return cols;
}

// Reduced diagonal blocks by column: split[p][s] lists, for each basis
// element of Cbar_p, its Dbar component in Cbar_s (x) Cbar_{p-s}.
std::vector<std::vector<Columns>> diagonal_columns(const GradedCoalgebra& c, unsigned d_max) {
  std::vector<std::vector<Columns>> out(d_max + 1);
  for (unsigned p = 2; p <= d_max; ++p) {
    out[p].resize(p);
    for (unsigned s = 1; s < p; ++s) out[p][s] = columns_of(c.diagonal(p, s));
  }
  return out;
}

// Cobar complex in internal degree d for lengths 0..max_len.
CochainComplex cobar_weight(const GradedCoalgebra& c, const std::vector<std::vector<Columns>>& split, unsigned d,
                            int max_len) {
  std::vector<std::vector<TensorWord>> words;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= max_len; ++n) {
    words.push_back(tensor_words(c.ranks(), static_cast<unsigned>(n), d));
    ranks.push_back(words.back().size());
  }
  std::vector<IntMatrix> diffs;
  for (int n = 0; n < max_len; ++n) {
    const auto& src = words[static_cast<std::size_t>(n)];
    const auto& dst = words[static_cast<std::size_t>(n) + 1];
    const WordIndex index = index_words(dst);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const TensorWord& w = src[col];
      for (std::size_t i = 0; i < w.parts.size(); ++i) {
        const unsigned p = w.parts[i];
        const int sign = (i + 1) % 2 == 0 ? 1 : -1;
        for (unsigned s = 1; s < p; ++s) {
          const std::size_t right_rank = c.rank(p - s);
          for (const auto& [t, v] : split[p][s][w.indices[i]]) {
            TensorWord out = w;
            out.parts[i] = s;
            out.parts.insert(out.parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, p - s);
            out.indices[i] = t / right_rank;
            out.indices.insert(out.indices.begin() + static_cast<std::ptrdiff_t>(i) + 1, t % right_rank);
            m.add_to(index.at(out), col, sign * v);
          }
        }
      }
    }
    diffs.push_back(std::move(m));
  }
  return CochainComplex(0, std::move(ranks), std::move(diffs));
}

void check_window(int n_max, unsigned d_max, unsigned available) {
  if (n_max < 0) throw Error("window: n_max must be nonnegative");
  if (static_cast<unsigned>(n_max) > d_max)
    throw Error("window: n_max must not exceed d_max (higher lengths vanish below the diagonal)");
  if (d_max > available)
    throw Error("window: d_max = " + std::to_string(d_max) + " exceeds the top degree " + std::to_string(available) +
                " of the input");
}

}  // namespace

std::vector<TensorWord> tensor_words(const std::vector<std::size_t>& ranks, unsigned n, unsigned d, bool allow_unit) {
  auto rank_of = [&](unsigned p) -> std::size_t {
    if (p == 0) return allow_unit ? 1 : 0;
    return p < ranks.size() ? ranks[p] : 0;
  };
  std::vector<std::vector<unsigned>> parts_list;
  std::vector<unsigned> prefix;
  compositions(n, d, allow_unit ? 0 : 1, prefix, parts_list);
  std::vector<TensorWord> out;
  for (const auto& parts : parts_list) {
    bool empty = false;
    for (unsigned p : parts) empty = empty || rank_of(p) == 0;
    if (empty) continue;
    TensorWord w{parts, std::vector<std::size_t>(n, 0)};
    for (;;) {
      out.push_back(w);
      bool done = true;
      for (std::size_t k = n; k-- > 0;) {
        if (++w.indices[k] < rank_of(parts[k])) {
          done = false;
          break;
        }
        w.indices[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

BigradedComplex cobar_complex(const GradedCoalgebra& c, int n_max, unsigned d_max) {
  check_window(n_max, d_max, c.d_max());
  const auto split = diagonal_columns(c, d_max);
  std::vector<CochainComplex> weights;
  for (unsigned d = 0; d <= d_max; ++d) weights.push_back(cobar_weight(c, split, d, n_max + 1));
  return BigradedComplex(Grading::cohomological, {0, n_max}, std::move(weights));
}

BidegreeTable cobar_cohomology(const GradedCoalgebra& c, int n_max, unsigned d_max) {
  return bigraded_cohomology(cobar_complex(c, n_max, d_max));
}

CosimplicialAbGroup cobar_cosimplicial(const GradedCoalgebra& c, unsigned d, int t) {
  if (t < 0) throw Error("cobar_cosimplicial: negative truncation");
  if (d > c.d_max()) throw Error("cobar_cosimplicial: internal degree above the top degree of the coalgebra");
  const auto top = static_cast<std::size_t>(t);
  const auto split = diagonal_columns(c, d);
  std::vector<std::vector<TensorWord>> words;
  std::vector<WordIndex> index;
  std::vector<std::size_t> ranks;
  for (std::size_t m = 0; m <= top; ++m) {
    words.push_back(tensor_words(c.ranks(), static_cast<unsigned>(m), d, true));
    index.push_back(index_words(words.back()));
    ranks.push_back(words.back().size());
  }
  auto insert_factor = [](TensorWord w, std::size_t pos, unsigned part, std::size_t idx) {
    w.parts.insert(w.parts.begin() + static_cast<std::ptrdiff_t>(pos), part);
    w.indices.insert(w.indices.begin() + static_cast<std::ptrdiff_t>(pos), idx);
    return w;
  };
  std::vector<std::vector<IntMatrix>> cofaces(top), codegeneracies(top);
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      IntMatrix f(ranks[m], ranks[m - 1]);
      for (std::size_t col = 0; col < words[m - 1].size(); ++col) {
        const TensorWord& w = words[m - 1][col];
        if (i == 0 || i == m) {
          f.add_to(index[m].at(insert_factor(w, i == 0 ? 0 : m - 1, 0, 0)), col, 1);
          continue;
        }
        // Full diagonal on factor i (1-based): c (x) 1 + 1 (x) c + Dbar(c).
        const std::size_t k = i - 1;
        const unsigned p = w.parts[k];
        f.add_to(index[m].at(insert_factor(w, k + 1, 0, 0)), col, 1);
        if (p == 0) continue;  // Delta(1) = 1 (x) 1
        f.add_to(index[m].at(insert_factor(w, k, 0, 0)), col, 1);
        for (unsigned s = 1; s < p; ++s) {
          const std::size_t right_rank = c.rank(p - s);
          for (const auto& [tv, v] : split[p][s][w.indices[k]]) {
            TensorWord out = w;
            out.parts[k] = s;
            out.indices[k] = tv / right_rank;
            out = insert_factor(out, k + 1, p - s, tv % right_rank);
            f.add_to(index[m].at(out), col, v);
          }
        }
      }
      cofaces[m - 1].push_back(std::move(f));
    }
  for (std::size_t m = 0; m < top; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      IntMatrix s(ranks[m], ranks[m + 1]);
      for (std::size_t col = 0; col < words[m + 1].size(); ++col) {
        TensorWord w = words[m + 1][col];
        if (w.parts[i] != 0) continue;
        w.parts.erase(w.parts.begin() + static_cast<std::ptrdiff_t>(i));
        w.indices.erase(w.indices.begin() + static_cast<std::ptrdiff_t>(i));
        s.set(index[m].at(w), col, 1);
      }
      codegeneracies[m].push_back(std::move(s));
    }
  return CosimplicialAbGroup(std::move(ranks), std::move(cofaces), std::move(codegeneracies));
}

namespace {

int total_degree(const GradedAlgebra& a, const TensorWord& w) {
  int t = 0;
  for (std::size_t i = 0; i < w.parts.size(); ++i) t += a.homological_degree(w.parts[i], w.indices[i]) + 1;
  return t;
}

using DegreeWords = std::map<int, std::vector<TensorWord>>;

// Bar words in internal degree d of length <= max_len, keyed by cochain
// degree -(total degree).
DegreeWords bar_words(const GradedAlgebra& a, unsigned d, int max_len) {
  DegreeWords by_degree;
  for (int n = 0; n <= max_len; ++n)
    for (auto& w : tensor_words(a.ranks(), static_cast<unsigned>(n), d)) by_degree[-total_degree(a, w)].push_back(w);
  return by_degree;
}

const std::vector<TensorWord>& words_at(const DegreeWords& words, int k) {
  static const std::vector<TensorWord> none;
  auto it = words.find(k);
  return it == words.end() ? none : it->second;
}

CochainComplex bar_weight(const GradedAlgebra& a, unsigned d, const DegreeWords& words, int lo, int hi) {
  std::map<std::pair<unsigned, unsigned>, Columns> mult;
  for (unsigned p = 1; p <= d; ++p)
    for (unsigned q = 1; p + q <= d; ++q) mult[{p, q}] = columns_of(a.product(p, q));
  std::vector<Columns> internal(d + 1);
  for (unsigned p = 1; p <= d; ++p) internal[p] = columns_of(a.differential(p));

  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) ranks.push_back(words_at(words, k).size());
  std::vector<IntMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    const auto& src = words_at(words, k);
    const auto& dst = words_at(words, k + 1);
    const WordIndex index = index_words(dst);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const TensorWord& w = src[col];
      int eps = 0;  // sum_{j <= i} (|a_j| + 1)
      for (std::size_t i = 0; i < w.parts.size(); ++i) {
        const int before = eps;
        eps += a.homological_degree(w.parts[i], w.indices[i]) + 1;
        // Internal part: -(-1)^{eps_{i-1}} s(d a_i).
        for (const auto& [r, v] : internal[w.parts[i]][w.indices[i]]) {
          TensorWord out = w;
          out.indices[i] = r;
          m.add_to(index.at(out), col, (before % 2 == 0 ? -1 : 1) * v);
        }
        if (i + 1 == w.parts.size()) break;
        // Merge factors i, i+1 with sign (-1)^{eps_i}.
        const unsigned p = w.parts[i], q = w.parts[i + 1];
        const std::size_t in = w.indices[i] * a.rank(q) + w.indices[i + 1];
        for (const auto& [r, v] : mult.at({p, q})[in]) {
          TensorWord out = w;
          out.parts[i] = p + q;
          out.indices[i] = r;
          out.parts.erase(out.parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          out.indices.erase(out.indices.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          m.add_to(index.at(out), col, (eps % 2 == 0 ? 1 : -1) * v);
        }
      }
    }
    diffs.push_back(std::move(m));
  }
  return CochainComplex(lo, std::move(ranks), std::move(diffs));
}

// Maximal length and stored cochain-degree range of the bar window in
// internal degree d. The graded case keeps one length beyond n_max; the dg
// case keeps everything.
struct BarRange {
  int max_len;
  int lo;
  int hi;
};

BarRange bar_range(const GradedAlgebra& a, const DegreeWords& words, int n_max, unsigned d) {
  if (!a.is_dg()) return {n_max + 1, -(n_max + 1), 0};
  if (words.empty()) return {static_cast<int>(d), 0, 0};
  return {static_cast<int>(d), words.begin()->first, words.rbegin()->first};
}

}  // namespace

BigradedComplex bar_complex(const GradedAlgebra& a, int n_max, unsigned d_max) {
  check_window(n_max, d_max, a.d_max());
  std::vector<CochainComplex> weights;
  int n_lo = 0, n_hi = 0;
  for (unsigned d = 0; d <= d_max; ++d) {
    const int len = a.is_dg() ? static_cast<int>(d) : n_max + 1;
    const DegreeWords words = bar_words(a, d, len);
    const BarRange r = bar_range(a, words, n_max, d);
    weights.push_back(bar_weight(a, d, words, r.lo, r.hi));
    n_lo = std::min(n_lo, -r.hi);
    n_hi = std::max(n_hi, -r.lo);
  }
  // In the dg case every total degree is final and reported.
  if (!a.is_dg()) return BigradedComplex(Grading::homological, {0, n_max}, std::move(weights));
  return BigradedComplex(Grading::homological, {n_lo, n_hi}, std::move(weights));
}

std::vector<ComplexMap> bar_map(const AlgebraMap& f, int n_max, unsigned d_max) {
  const GradedAlgebra& a = f.source();
  const GradedAlgebra& b = f.target();
  check_window(n_max, d_max, a.d_max());
  if (a.is_dg() != b.is_dg()) throw Error("bar_map: source and target must both be graded or both dg");
  std::vector<Columns> comp;
  for (unsigned d = 0; d <= d_max; ++d) comp.push_back(columns_of(f.component(d)));
  std::vector<ComplexMap> out;
  for (unsigned d = 0; d <= d_max; ++d) {
    const int len = a.is_dg() ? static_cast<int>(d) : n_max + 1;
    const DegreeWords ws = bar_words(a, d, len), wt = bar_words(b, d, len);
    const BarRange rs = bar_range(a, ws, n_max, d), rt = bar_range(b, wt, n_max, d);
    const int lo = std::min(rs.lo, rt.lo), hi = std::max(rs.hi, rt.hi);
    std::vector<IntMatrix> components;
    for (int k = lo; k <= hi; ++k) {
      const auto& src = words_at(ws, k);
      const auto& dst = words_at(wt, k);
      const WordIndex index = index_words(dst);
      IntMatrix m(dst.size(), src.size());
      for (std::size_t col = 0; col < src.size(); ++col) {
        // f(a_1)|...|f(a_n), expanded factor by factor.
        std::vector<std::pair<TensorWord, Integer>> partial{{src[col], Integer(1)}};
        for (std::size_t i = 0; i < src[col].parts.size(); ++i) {
          std::vector<std::pair<TensorWord, Integer>> next;
          for (const auto& [w, c] : partial)
            for (const auto& [r, v] : comp[w.parts[i]][w.indices[i]]) {
              TensorWord x = w;
              x.indices[i] = r;
              next.emplace_back(std::move(x), c * v);
            }
          partial = std::move(next);
        }
        for (const auto& [w, c] : partial) m.add_to(index.at(w), col, c);
      }
      components.push_back(std::move(m));
    }
    out.emplace_back(bar_weight(a, d, ws, lo, hi), bar_weight(b, d, wt, lo, hi), std::move(components));
  }
  return out;
}

BidegreeTable bar_homology(const GradedAlgebra& a, int n_max, unsigned d_max) {
  return bigraded_cohomology(bar_complex(a, n_max, d_max));
}

DualComparison dual_compare(const GradedCoalgebra& c, int n_max, unsigned d_max) {
  const BigradedComplex cobar = cobar_complex(c, n_max, d_max);
  const BigradedComplex bar = bar_complex(dual_algebra(c), n_max, d_max);
  DualComparison out;
  for (unsigned d = 0; d <= d_max; ++d)
    for (int n = 1; n <= n_max; ++n) {
      ++out.compared;
      if (cobar.rank(n, d) != bar.rank(n, d) || !(cobar.differential(n - 1, d).transpose() == bar.differential(n, d)))
        out.mismatches.push_back({n, d});
    }
  out.equal = out.mismatches.empty();
  return out;
}

LengthFiltration filtration_quotients(const GradedCoalgebra& c, unsigned n, unsigned d_max) {
  if (n < 1) throw Error("filtration_quotients needs n >= 1");
  if (d_max > c.d_max()) throw Error("filtration_quotients: d_max above the top degree of the coalgebra");
  const auto split = diagonal_columns(c, d_max);
  LengthFiltration out;
  out.n = n;
  std::vector<CochainComplex> weights;
  for (unsigned d = 0; d <= d_max; ++d) {
    out.slice_ranks.push_back(tensor_words(c.ranks(), n - 1, d).size());
    weights.push_back(cobar_weight(c, split, d, static_cast<int>(n) - 1));
  }
  out.quotient = BigradedComplex(Grading::cohomological, {0, static_cast<int>(n) - 1}, std::move(weights));
  return out;
}

}  // namespace binring

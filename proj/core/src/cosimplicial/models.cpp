#include "binring/cosimplicial/models.hpp"

#include "binring/error.hpp"

#include <algorithm>
#include <map>

namespace binring {

CosimplicialAbGroup constant_z(int t) {
  if (t < 0) throw Error("constant_z: negative truncation");
  const auto n = static_cast<std::size_t>(t);
  std::vector<std::vector<IntMatrix>> cofaces(n), codegeneracies(n);
  for (std::size_t m = 1; m <= n; ++m) cofaces[m - 1].assign(m + 1, IntMatrix::identity(1));
  for (std::size_t m = 0; m < n; ++m) codegeneracies[m].assign(m + 1, IntMatrix::identity(1));
  return CosimplicialAbGroup(std::vector<std::size_t>(n + 1, 1), std::move(cofaces), std::move(codegeneracies));
}

SimplicialAbGroup z1_simplicial(int t) {
  if (t < 1) throw Error("z1_simplicial needs truncation >= 1");
  const auto top = static_cast<std::size_t>(t);
  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t m = 0; m <= top; ++m) ranks[m] = m;
  std::vector<std::vector<IntMatrix>> faces(top), degeneracies(top);
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      // Coordinates a_1..a_m map to m-1 coordinates (0-based columns a-1).
      IntMatrix f(m - 1, m);
      for (std::size_t a = 1; a <= m; ++a) {
        std::size_t target;
        if (i == 0) {
          if (a == 1) continue;
          target = a - 1;
        } else if (i == m) {
          if (a == m) continue;
          target = a;
        } else {
          target = a <= i ? a : a - 1;
        }
        f.set(target - 1, a - 1, 1);
      }
      faces[m - 1].push_back(std::move(f));
    }
  for (std::size_t m = 0; m < top; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      // s_i inserts a zero coordinate at 0-based position i.
      IntMatrix s(m + 1, m);
      for (std::size_t a = 0; a < m; ++a) s.set(a < i ? a : a + 1, a, 1);
      degeneracies[m].push_back(std::move(s));
    }
  return SimplicialAbGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

std::vector<std::vector<unsigned>> surjections(unsigned m, unsigned n) {
  std::vector<std::vector<unsigned>> out;
  if (n > m) return out;
  // Choose the n jump positions among 1..m; lexicographic order on sequences
  // is reverse-lexicographic on jump sets, so generate and sort.
  std::vector<unsigned> seq(m + 1, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned value) -> void {
    if (pos == m + 1) {
      if (value == n) out.push_back(seq);
      return;
    }
    for (unsigned v : {value, value + 1}) {
      if (pos == 0 && v != 0) continue;
      if (v > n || n - v > m - pos) continue;
      seq[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialAbGroup gamma_sphere_simplicial(unsigned n, int t) {
  if (n < 1) throw Error("gamma_sphere needs n >= 1");
  if (t < static_cast<int>(n)) throw Error("gamma_sphere needs truncation >= n");
  const auto top = static_cast<unsigned>(t);
  std::vector<std::vector<std::vector<unsigned>>> basis(top + 1);
  std::vector<std::map<std::vector<unsigned>, std::size_t>> index(top + 1);
  std::vector<std::size_t> ranks(top + 1);
  for (unsigned m = 0; m <= top; ++m) {
    basis[m] = surjections(m, n);
    for (std::size_t k = 0; k < basis[m].size(); ++k) index[m][basis[m][k]] = k;
    ranks[m] = basis[m].size();
  }
  std::vector<std::vector<IntMatrix>> faces(top), degeneracies(top);
  for (unsigned m = 1; m <= top; ++m)
    for (unsigned i = 0; i <= m; ++i) {
      IntMatrix f(ranks[m - 1], ranks[m]);
      for (std::size_t k = 0; k < basis[m].size(); ++k) {
        std::vector<unsigned> s = basis[m][k];
        s.erase(s.begin() + i);
        auto it = index[m - 1].find(s);
        if (it != index[m - 1].end()) f.set(it->second, k, 1);
      }
      faces[m - 1].push_back(std::move(f));
    }
  for (unsigned m = 0; m < top; ++m)
    for (unsigned i = 0; i <= m; ++i) {
      IntMatrix s(ranks[m + 1], ranks[m]);
      for (std::size_t k = 0; k < basis[m].size(); ++k) {
        std::vector<unsigned> seq = basis[m][k];
        seq.insert(seq.begin() + i, seq[i]);
        s.set(index[m + 1].at(seq), k, 1);
      }
      degeneracies[m].push_back(std::move(s));
    }
  return SimplicialAbGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

CosimplicialAbGroup gamma_sphere(unsigned n, int t) { return dual(gamma_sphere_simplicial(n, t)); }

}  // namespace binring

#include "binring/spaces/standard.hpp"

#include "binring/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace binring {

FiniteSimplicialSet point() { return FiniteSimplicialSet("point", {{"*"}}, {}); }

FiniteSimplicialSet from_simplicial_complex(std::string name, const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    if (facet.empty() || std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw Error("from_simplicial_complex: facets need distinct vertices");
    const std::size_t k = facet.size();
    if (by_dim.size() < k) by_dim.resize(k);
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1ul << b)) face.push_back(facet[b]);
      by_dim[face.size() - 1].insert(face);
    }
  }
  auto label = [](const std::vector<int>& s) {
    std::string out = "[";
    for (std::size_t t = 0; t < s.size(); ++t) out += (t ? "," : "") + std::to_string(s[t]);
    return out + "]";
  };
  std::vector<std::vector<std::string>> names(by_dim.size());
  std::vector<std::vector<std::vector<FaceRecord>>> faces(by_dim.size());
  std::vector<std::map<std::vector<int>, std::size_t>> index(by_dim.size());
  for (std::size_t n = 0; n < by_dim.size(); ++n) {
    for (const auto& s : by_dim[n]) {
      index[n][s] = names[n].size();
      names[n].push_back(label(s));
    }
    if (n == 0) continue;
    SurjectionWord identity(n);
    for (unsigned t = 0; t < n; ++t) identity[t] = t;
    for (const auto& s : by_dim[n]) {
      std::vector<FaceRecord> recs;
      for (std::size_t i = 0; i <= n; ++i) {
        auto f = s;
        f.erase(f.begin() + static_cast<long>(i));
        recs.push_back({index[n - 1].at(f), identity});
      }
      faces[n].push_back(std::move(recs));
    }
  }
  return FiniteSimplicialSet(std::move(name), std::move(names), std::move(faces));
}

namespace {

std::vector<int> range_vertices(unsigned n) {
  std::vector<int> v(n + 1);
  for (unsigned t = 0; t <= n; ++t) v[t] = static_cast<int>(t);
  return v;
}

}  // namespace

FiniteSimplicialSet simplex(unsigned n) {
  return from_simplicial_complex("simplex" + std::to_string(n), {range_vertices(n)});
}

FiniteSimplicialSet boundary(unsigned n) {
  if (n == 0) throw Error("boundary needs n >= 1");
  std::vector<std::vector<int>> facets;
  for (unsigned i = 0; i <= n; ++i) {
    auto f = range_vertices(n);
    f.erase(f.begin() + i);
    facets.push_back(std::move(f));
  }
  return from_simplicial_complex("boundary" + std::to_string(n), facets);
}

FiniteSimplicialSet sphere(unsigned n) {
  const std::string name = n == 1 ? "circle" : "sphere" + std::to_string(n);
  if (n == 0) return FiniteSimplicialSet(name, {{"a", "b"}}, {});
  std::vector<std::vector<std::string>> names(n + 1);
  names[0] = {"*"};
  names[n] = {"s"};
  std::vector<std::vector<std::vector<FaceRecord>>> faces(n + 1);
  faces[n] = {std::vector<FaceRecord>(n + 1, FaceRecord{0, SurjectionWord(n, 0)})};
  return FiniteSimplicialSet(name, std::move(names), std::move(faces));
}

FiniteSimplicialSet circle() { return sphere(1); }

namespace {

// Positions t where both words repeat (t, t+1): the directions of a common
// degeneracy.
std::vector<bool> common_repeats(const SurjectionWord& a, const SurjectionWord& b) {
  std::vector<bool> out(a.size() - 1);
  for (std::size_t t = 0; t + 1 < a.size(); ++t) out[t] = a[t] == a[t + 1] && b[t] == b[t + 1];
  return out;
}

}  // namespace

Simplex ProductSet::pair(const Simplex& a, const Simplex& b) const {
  if (a.dim() != b.dim()) throw Error("product simplex needs equal dimensions");
  const auto rep = common_repeats(a.word, b.word);
  // rho collapses the common repeats; (a, b) = rho^* (a', b') with (a', b')
  // nondegenerate.
  SurjectionWord rho(a.word.size());
  for (std::size_t t = 1; t < rho.size(); ++t) rho[t] = rho[t - 1] + (rep[t - 1] ? 0 : 1);
  const unsigned n = rho.back();
  Simplex ca{a.core_dim, a.core, SurjectionWord(n + 1)}, cb{b.core_dim, b.core, SurjectionWord(n + 1)};
  for (std::size_t t = 0; t < rho.size(); ++t) {
    ca.word[rho[t]] = a.word[t];
    cb.word[rho[t]] = b.word[t];
  }
  auto it = core_index.find({ca, cb});
  if (it == core_index.end()) throw InternalError("product core missing");
  return {n, it->second, std::move(rho)};
}

ProductSet product_set(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  ProductSet p{{}, x, y, {}};
  const int top = x.dimension() + y.dimension();
  std::vector<std::vector<std::pair<Simplex, Simplex>>> cores(static_cast<std::size_t>(std::max(top + 1, 0)));
  std::vector<std::vector<std::string>> names(cores.size());
  for (unsigned n = 0; n < cores.size(); ++n) {
    const auto xs = x.simplices(n), ys = y.simplices(n);
    for (const auto& a : xs)
      for (const auto& b : ys) {
        const auto rep = common_repeats(a.word, b.word);
        if (std::find(rep.begin(), rep.end(), true) != rep.end()) continue;
        p.core_index[{a, b}] = cores[n].size();
        cores[n].emplace_back(a, b);
        names[n].push_back("(" + x.simplex_name(a) + "," + y.simplex_name(b) + ")");
      }
  }
  std::vector<std::vector<std::vector<FaceRecord>>> faces(cores.size());
  for (unsigned n = 1; n < cores.size(); ++n)
    for (const auto& [a, b] : cores[n]) {
      std::vector<FaceRecord> recs;
      for (unsigned i = 0; i <= n; ++i) {
        Simplex f = p.pair(x.face(a, i), y.face(b, i));
        recs.push_back({f.core, f.word});
      }
      faces[n].push_back(std::move(recs));
    }
  p.set = FiniteSimplicialSet(x.name() + "x" + y.name(), std::move(names), std::move(faces));
  return p;
}

FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  return product_set(x, y).set;
}

FiniteSimplicialSet torus() { return product(circle(), circle()).renamed("torus"); }

FiniteSimplicialSet rp2() {
  return from_simplicial_complex("rp2", {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

namespace {

std::optional<unsigned> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  unsigned n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n > 8) return std::nullopt;
  return n;
}

}  // namespace

FiniteSimplicialSet standard_space(const std::string& name) {
  if (name == "point") return point();
  if (name == "circle") return circle();
  if (name == "torus") return torus();
  if (name == "rp2") return rp2();
  if (auto n = suffix_number(name, "sphere")) return sphere(*n);
  if (auto n = suffix_number(name, "simplex")) return simplex(*n);
  if (auto n = suffix_number(name, "boundary"); n && *n >= 1) return boundary(*n);
  throw Error("unknown space '" + name + "'");
}

std::vector<std::string> standard_space_names() {
  return {"point", "circle", "sphere2", "sphere3", "torus", "rp2", "simplex2", "boundary3"};
}

}  // namespace binring

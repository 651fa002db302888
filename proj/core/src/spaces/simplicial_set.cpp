#include "binring/spaces/simplicial_set.hpp"

#include "binring/cosimplicial/models.hpp"
#include "binring/error.hpp"

#include <set>

namespace binring {

bool is_surjection_word(const SurjectionWord& w) {
  if (w.empty() || w[0] != 0) return false;
  for (std::size_t t = 1; t < w.size(); ++t)
    if (w[t] != w[t - 1] && w[t] != w[t - 1] + 1) return false;
  return true;
}

FiniteSimplicialSet::FiniteSimplicialSet(std::string name, std::vector<std::vector<std::string>> names,
                                         std::vector<std::vector<std::vector<FaceRecord>>> faces)
    : name_(std::move(name)), names_(std::move(names)), faces_(std::move(faces)) {
  faces_.resize(names_.size());
  std::set<std::string> seen;
  for (unsigned n = 0; n < names_.size(); ++n) {
    for (const auto& s : names_[n])
      if (!seen.insert(s).second) throw Error("simplicial set '" + name_ + "': duplicate simplex name " + s);
    if (n == 0) {
      faces_[0].assign(names_[0].size(), {});
      continue;
    }
    if (faces_[n].size() != names_[n].size())
      throw Error("simplicial set '" + name_ + "': face list count differs from simplex count in dimension " +
                  std::to_string(n));
    for (std::size_t x = 0; x < names_[n].size(); ++x) {
      const auto& recs = faces_[n][x];
      if (recs.size() != n + 1) throw Error("simplex " + names_[n][x] + " needs " + std::to_string(n + 1) + " faces");
      for (const auto& r : recs) {
        if (r.word.size() != n || !is_surjection_word(r.word))
          throw Error("simplex " + names_[n][x] + ": face word is not a surjection from [" + std::to_string(n - 1) + "]");
        const unsigned k = r.word.back();
        if (r.target >= core_count(k)) throw Error("simplex " + names_[n][x] + ": face target out of range");
      }
    }
  }
}

int FiniteSimplicialSet::dimension() const {
  for (int n = static_cast<int>(names_.size()) - 1; n >= 0; --n)
    if (!names_[static_cast<std::size_t>(n)].empty()) return n;
  return -1;
}

const FaceRecord& FiniteSimplicialSet::face_record(unsigned n, std::size_t x, unsigned i) const {
  return faces_.at(n).at(x).at(i);
}

std::optional<std::pair<unsigned, std::size_t>> FiniteSimplicialSet::find_core(const std::string& name) const {
  for (unsigned n = 0; n < names_.size(); ++n)
    for (std::size_t x = 0; x < names_[n].size(); ++x)
      if (names_[n][x] == name) return std::pair{n, x};
  return std::nullopt;
}

std::vector<Simplex> FiniteSimplicialSet::simplices(unsigned m) const {
  std::vector<Simplex> out;
  for (unsigned k = 0; k <= m && k < names_.size(); ++k) {
    if (names_[k].empty()) continue;
    const auto words = surjections(m, k);
    for (std::size_t x = 0; x < names_[k].size(); ++x)
      for (const auto& w : words) out.push_back({k, x, w});
  }
  return out;
}

std::size_t FiniteSimplicialSet::simplex_count(unsigned m) const {
  std::size_t total = 0;
  for (unsigned k = 0; k <= m && k < names_.size(); ++k) {
    // binom(m, k) surjections [m] ->> [k].
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), m, k);
    total += names_[k].size() * b.get_ui();
  }
  return total;
}

Simplex FiniteSimplicialSet::face(const Simplex& s, unsigned i) const {
  const unsigned m = s.dim();
  if (m == 0 || i > m) throw Error("face: index out of range");
  SurjectionWord w = s.word;
  const unsigned removed = w[i];
  w.erase(w.begin() + i);
  const bool unique = (i == 0 || s.word[i - 1] != removed) && (i == m || s.word[i + 1] != removed);
  if (!unique) return {s.core_dim, s.core, std::move(w)};
  // theta o delta_i misses `removed`: it factors as delta_removed o tau, so the
  // face is tau^* of the recorded face d_removed of the core.
  for (auto& v : w)
    if (v > removed) --v;
  const FaceRecord& r = face_record(s.core_dim, s.core, removed);
  SurjectionWord composed(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) composed[t] = r.word[w[t]];
  return {r.word.back(), r.target, std::move(composed)};
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& s, unsigned i) {
  if (i > s.dim()) throw Error("degeneracy: index out of range");
  Simplex out = s;
  out.word.insert(out.word.begin() + i, s.word[i]);
  return out;
}

Simplex FiniteSimplicialSet::degenerate(const Simplex& s, const SurjectionWord& theta) {
  if (!is_surjection_word(theta) || theta.back() != s.dim()) throw Error("degenerate: word does not hit every vertex");
  Simplex out{s.core_dim, s.core, SurjectionWord(theta.size())};
  for (std::size_t t = 0; t < theta.size(); ++t) out.word[t] = s.word[theta[t]];
  return out;
}

std::string FiniteSimplicialSet::simplex_name(const Simplex& s) const {
  std::string out = core_name(s.core_dim, s.core);
  if (s.nondegenerate()) return out;
  out += "<";
  for (std::size_t t = 0; t < s.word.size(); ++t) out += (t ? "," : "") + std::to_string(s.word[t]);
  return out + ">";
}

SimplexIndex::SimplexIndex(const FiniteSimplicialSet& x, unsigned m) : list_(x.simplices(m)) {
  for (std::size_t k = 0; k < list_.size(); ++k) index_.emplace(list_[k], k);
}

std::size_t SimplexIndex::at(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw InternalError("simplex outside the enumerated level");
  return it->second;
}

SimplicialAbGroup FiniteSimplicialSet::chains(int t) const {
  if (t < 0) throw Error("chains: negative truncation");
  const auto top = static_cast<unsigned>(t);
  std::vector<SimplexIndex> levels;
  std::vector<std::size_t> ranks;
  for (unsigned m = 0; m <= top; ++m) {
    levels.emplace_back(*this, m);
    ranks.push_back(levels.back().size());
  }
  std::vector<std::vector<IntMatrix>> faces(top), degeneracies(top);
  for (unsigned m = 1; m <= top; ++m)
    for (unsigned i = 0; i <= m; ++i) {
      IntMatrix f(ranks[m - 1], ranks[m]);
      const auto& list = levels[m].simplices();
      for (std::size_t k = 0; k < list.size(); ++k) f.set(levels[m - 1].at(face(list[k], i)), k, 1);
      faces[m - 1].push_back(std::move(f));
    }
  for (unsigned m = 0; m < top; ++m)
    for (unsigned i = 0; i <= m; ++i) {
      IntMatrix s(ranks[m + 1], ranks[m]);
      const auto& list = levels[m].simplices();
      for (std::size_t k = 0; k < list.size(); ++k) s.set(levels[m + 1].at(degeneracy(list[k], i)), k, 1);
      degeneracies[m].push_back(std::move(s));
    }
  return SimplicialAbGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

// Structure maps send basis simplices to basis simplices, so the matrix
// identities on Z[X] are exactly the set-level identities.
std::optional<IdentityViolation> FiniteSimplicialSet::validate(int t) const { return chains(t).validate(); }

FiniteSimplicialSet FiniteSimplicialSet::renamed(std::string name) const {
  FiniteSimplicialSet out = *this;
  out.name_ = std::move(name);
  return out;
}

nlohmann::json to_json(const FiniteSimplicialSet& x) {
  nlohmann::json dims = nlohmann::json::array();
  for (int n = 0; n <= x.dimension(); ++n) {
    const auto un = static_cast<unsigned>(n);
    nlohmann::json level = nlohmann::json::array();
    for (std::size_t c = 0; c < x.core_count(un); ++c) {
      nlohmann::json s{{"name", x.core_name(un, c)}};
      if (n > 0) {
        nlohmann::json faces = nlohmann::json::array();
        for (unsigned i = 0; i <= un; ++i) {
          const auto& r = x.face_record(un, c, i);
          faces.push_back(nlohmann::json::array({x.core_name(r.word.back(), r.target), r.word}));
        }
        s["faces"] = std::move(faces);
      }
      level.push_back(std::move(s));
    }
    dims.push_back(std::move(level));
  }
  return {{"name", x.name()}, {"simplices", std::move(dims)}};
}

FiniteSimplicialSet simplicial_set_from_json(const nlohmann::json& j) {
  try {
    const std::string name = j.value("name", std::string("unnamed"));
    const auto& dims = j.at("simplices");
    std::vector<std::vector<std::string>> names(dims.size());
    std::map<std::string, std::pair<unsigned, std::size_t>> where;
    for (unsigned n = 0; n < dims.size(); ++n)
      for (const auto& s : dims[n]) {
        names[n].push_back(s.at("name").get<std::string>());
        where[names[n].back()] = {n, names[n].size() - 1};
      }
    std::vector<std::vector<std::vector<FaceRecord>>> faces(dims.size());
    for (unsigned n = 1; n < dims.size(); ++n)
      for (const auto& s : dims[n]) {
        std::vector<FaceRecord> recs;
        for (const auto& f : s.at("faces")) {
          const auto target = f.at(0).get<std::string>();
          auto it = where.find(target);
          if (it == where.end()) throw Error("unknown face target " + target);
          FaceRecord r{it->second.second, f.at(1).get<SurjectionWord>()};
          if (r.word.empty() || r.word.back() != it->second.first)
            throw Error("face word of " + s.at("name").get<std::string>() + " does not end at the dimension of " + target);
          recs.push_back(std::move(r));
        }
        faces[n].push_back(std::move(recs));
      }
    return FiniteSimplicialSet(name, std::move(names), std::move(faces));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("simplicial set JSON: ") + e.what());
  }
}

}  // namespace binring

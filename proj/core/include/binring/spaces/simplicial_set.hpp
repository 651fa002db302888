#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace binring {

/// A nondecreasing surjection [m] ->> [k] written as its value sequence
/// (length m + 1, first entry 0, last entry k).
using SurjectionWord = std::vector<unsigned>;

bool is_surjection_word(const SurjectionWord& w);

/// theta^* core: the degeneracy of a nondegenerate simplex along theta. Every
/// simplex of a FiniteSimplicialSet has exactly one such form.
struct Simplex {
  unsigned core_dim = 0;
  std::size_t core = 0;
  SurjectionWord word{0};

  unsigned dim() const { return static_cast<unsigned>(word.size()) - 1; }
  bool nondegenerate() const { return dim() == core_dim; }
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// d_i of a nondegenerate simplex, as (target core, word) with the target in
/// dimension word.back().
struct FaceRecord {
  std::size_t target = 0;
  SurjectionWord word;
  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

/// Simplicial set with finitely many nondegenerate simplices. Only the cores
/// and their faces are stored; degenerate simplices are generated on demand.
class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet() = default;
  /// names[n] lists the n-dimensional cores. faces[n][x] holds the n+1 faces
  /// of core x for n >= 1 (faces[0] is ignored). Throws Error on malformed
  /// records; simplicial identities are left to validate().
  FiniteSimplicialSet(std::string name, std::vector<std::vector<std::string>> names,
                      std::vector<std::vector<std::vector<FaceRecord>>> faces);

  const std::string& name() const { return name_; }
  /// Top dimension carrying a core; -1 for the empty set.
  int dimension() const;
  std::size_t core_count(unsigned n) const { return n < names_.size() ? names_[n].size() : 0; }
  const std::string& core_name(unsigned n, std::size_t x) const { return names_.at(n).at(x); }
  const FaceRecord& face_record(unsigned n, std::size_t x, unsigned i) const;
  std::optional<std::pair<unsigned, std::size_t>> find_core(const std::string& name) const;

  /// All m-simplices: by core dimension, then core, then word in lex order.
  std::vector<Simplex> simplices(unsigned m) const;
  std::size_t simplex_count(unsigned m) const;

  Simplex face(const Simplex& s, unsigned i) const;
  static Simplex degeneracy(const Simplex& s, unsigned i);
  /// The simplex theta^* s for a surjection word theta of length dim(s) + 1 + k.
  static Simplex degenerate(const Simplex& s, const SurjectionWord& theta);
  std::string simplex_name(const Simplex& s) const;

  /// Z[X] truncated at t, basis as in simplices().
  SimplicialAbGroup chains(int t) const;

  /// Checks every simplicial identity on the generated simplices up to t.
  std::optional<IdentityViolation> validate(int t) const;

  FiniteSimplicialSet renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<FaceRecord>>> faces_;
};

/// Position of every simplex of one degree inside simplices(m).
class SimplexIndex {
 public:
  SimplexIndex(const FiniteSimplicialSet& x, unsigned m);
  const std::vector<Simplex>& simplices() const { return list_; }
  std::size_t size() const { return list_.size(); }
  std::size_t at(const Simplex& s) const;

 private:
  std::vector<Simplex> list_;
  std::map<Simplex, std::size_t> index_;
};

/// {"name": ..., "simplices": [[{"name": "v"}], [{"name": "e", "faces": [["v", [0]], ...]}], ...]}
/// A face is (core name, surjection word onto that core).
nlohmann::json to_json(const FiniteSimplicialSet& x);
FiniteSimplicialSet simplicial_set_from_json(const nlohmann::json& j);

}  // namespace binring

#pragma once

#include "binring/linalg/cochain_complex.hpp"
#include "binring/linalg/field_rank.hpp"

#include <map>
#include <string>
#include <vector>

namespace binring {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct CohomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free_of_rank(std::size_t r) const { return free_rank == r && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  static CohomologyGroup free(std::size_t r) { return {r, {}}; }
  /// Normalizes an arbitrary list of cyclic orders (0 means Z, 1 is dropped)
  /// into invariant-factor form.
  static CohomologyGroup from_cyclic_orders(const std::vector<Integer>& orders);

  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

/// H^n(C; Z) for every degree of C.
std::map<int, CohomologyGroup> cohomology(const CochainComplex& c);

/// Dimensions of H^n(C (x) k) for a coefficient field k. C is degreewise free,
/// so the plain tensor product computes the derived one.
struct FieldCohomology {
  Coefficients field;
  std::map<int, std::size_t> dimensions;
  bool acyclic() const;
};

FieldCohomology base_change(const CochainComplex& c, const Coefficients& field);

/// Detects acyclicity over Z from Q and F_p base changes, and cross-checks the
/// verdict against the integral computation.
struct AcyclicityReport {
  bool acyclic_over_z = false;
  bool acyclic_over_q = false;
  /// Primes dividing some torsion invariant of H(C; Z).
  std::vector<Integer> witness_primes;
  /// Verdict over F_p for every witness prime and every probe prime.
  std::map<unsigned long, bool> acyclic_over_fp;
  /// acyclic_over_z agrees with (acyclic over Q and over F_p for all tested p).
  bool consistent = false;
};

/// `probe_primes` are tested in addition to the witness primes.
AcyclicityReport acyclicity_certificate(const CochainComplex& c,
                                        const std::vector<unsigned long>& probe_primes = {2, 3, 5, 7});

bool is_acyclic(const CochainComplex& c);

/// True iff the mapping cone of f is acyclic over Z.
bool is_quasi_iso(const ComplexMap& f);

/// True iff H^n(cone f) = 0 for every n in [from, to]. Vanishing on
/// [m-1, m] makes H^m(f) an isomorphism.
bool cone_acyclic_in_degrees(const ComplexMap& f, int from, int to);

}  // namespace binring

#include "binring/linalg/cohomology.hpp"

#include "binring/error.hpp"
#include "binring/linalg/primes.hpp"
#include "binring/linalg/smith.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace binring {

std::string CohomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

CohomologyGroup CohomologyGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  CohomologyGroup g;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (abs(o) != 1)
      finite.push_back(abs(o));
  }
  if (!finite.empty()) {
    IntMatrix diag = IntMatrix::diagonal(finite.size(), finite.size(), finite);
    for (const auto& t : invariant_factors(diag))
      if (t != 1) g.torsion.push_back(t);
  }
  return g;
}

namespace {

struct DifferentialData {
  std::size_t rank = 0;
  std::vector<Integer> invariants;
};

}  // namespace

std::map<int, CohomologyGroup> cohomology(const CochainComplex& c) {
  std::map<int, CohomologyGroup> out;
  if (c.empty()) return out;
  std::map<int, DifferentialData> data;
  for (int n = c.lo(); n < c.hi(); ++n) {
    auto inv = invariant_factors(c.differential(n));
    data[n] = {inv.size(), std::move(inv)};
  }
  for (int n = c.lo(); n <= c.hi(); ++n) {
    CohomologyGroup g;
    const std::size_t out_rank = data.count(n) ? data[n].rank : 0;
    const std::size_t in_rank = data.count(n - 1) ? data[n - 1].rank : 0;
    g.free_rank = c.rank(n) - out_rank - in_rank;
    if (data.count(n - 1))
      for (const auto& t : data[n - 1].invariants)
        if (t > 1) g.torsion.push_back(t);
    out[n] = std::move(g);
  }
  return out;
}

bool FieldCohomology::acyclic() const {
  return std::all_of(dimensions.begin(), dimensions.end(), [](const auto& kv) { return kv.second == 0; });
}

FieldCohomology base_change(const CochainComplex& c, const Coefficients& field) {
  FieldCohomology out{field, {}};
  if (c.empty()) return out;
  std::map<int, std::size_t> ranks;
  for (int n = c.lo(); n < c.hi(); ++n) ranks[n] = rank_over(c.differential(n), field);
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const std::size_t r_out = ranks.count(n) ? ranks[n] : 0;
    const std::size_t r_in = ranks.count(n - 1) ? ranks[n - 1] : 0;
    out.dimensions[n] = c.rank(n) - r_out - r_in;
  }
  return out;
}

bool is_acyclic(const CochainComplex& c) {
  auto h = cohomology(c);
  return std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

AcyclicityReport acyclicity_certificate(const CochainComplex& c, const std::vector<unsigned long>& probe_primes) {
  AcyclicityReport report;
  auto h = cohomology(c);
  report.acyclic_over_z = std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second.is_zero(); });

  std::set<Integer> witnesses;
  for (const auto& [n, g] : h)
    for (const auto& t : g.torsion)
      for (const auto& p : prime_divisors(t)) witnesses.insert(p);
  report.witness_primes.assign(witnesses.begin(), witnesses.end());

  report.acyclic_over_q = base_change(c, Coefficients::rationals()).acyclic();
  std::set<unsigned long> tested(probe_primes.begin(), probe_primes.end());
  for (const auto& p : report.witness_primes) {
    if (!p.fits_ulong_p()) throw Error("acyclicity_certificate: witness prime too large for F_p arithmetic");
    tested.insert(p.get_ui());
  }
  bool all_fields = report.acyclic_over_q;
  for (unsigned long p : tested) {
    bool acyclic = base_change(c, Coefficients::prime_field(p)).acyclic();
    report.acyclic_over_fp[p] = acyclic;
    all_fields = all_fields && acyclic;
  }
  // Acyclic over Z forces acyclicity after any base change; conversely Q plus
  // every prime dividing a torsion invariant detects all of H(C; Z).
  report.consistent = report.acyclic_over_z == all_fields;
  return report;
}

bool is_quasi_iso(const ComplexMap& f) { return is_acyclic(mapping_cone(f)); }

bool cone_acyclic_in_degrees(const ComplexMap& f, int from, int to) {
  auto h = cohomology(mapping_cone(f));
  for (const auto& [n, g] : h)
    if (n >= from && n <= to && !g.is_zero()) return false;
  return true;
}

}  // namespace binring

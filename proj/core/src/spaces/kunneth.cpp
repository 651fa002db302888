#include "binring/spaces/kunneth.hpp"

#include "binring/cosimplicial/normalize.hpp"
#include "binring/error.hpp"
#include "binring/spaces/cochains.hpp"

#include <algorithm>

namespace binring {

CosimplicialAbGroup degreewise_tensor(const CosimplicialAbGroup& a, const CosimplicialAbGroup& b) {
  const int t = std::min(a.truncation(), b.truncation());
  std::vector<std::size_t> ranks;
  for (int m = 0; m <= t; ++m) ranks.push_back(a.rank(m) * b.rank(m));
  std::vector<std::vector<IntMatrix>> cofaces(static_cast<std::size_t>(t)), codegeneracies(static_cast<std::size_t>(t));
  for (int m = 1; m <= t; ++m)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i)
      cofaces[static_cast<std::size_t>(m - 1)].push_back(IntMatrix::kronecker(a.coface(m, i), b.coface(m, i)));
  for (int m = 0; m < t; ++m)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i)
      codegeneracies[static_cast<std::size_t>(m)].push_back(
          IntMatrix::kronecker(a.codegeneracy(m, i), b.codegeneracy(m, i)));
  return CosimplicialAbGroup(std::move(ranks), std::move(cofaces), std::move(codegeneracies));
}

std::vector<IntMatrix> outer_product_map(const ProductSet& p, int t) {
  std::vector<IntMatrix> out;
  for (unsigned m = 0; m <= static_cast<unsigned>(t); ++m) {
    const SimplexIndex ix(p.x, m), iy(p.y, m), ip(p.set, m);
    IntMatrix phi(ip.size(), ix.size() * iy.size());
    for (std::size_t a = 0; a < ix.size(); ++a)
      for (std::size_t b = 0; b < iy.size(); ++b)
        phi.set(ip.at(p.pair(ix.simplices()[a], iy.simplices()[b])), a * iy.size() + b, 1);
    out.push_back(std::move(phi));
  }
  return out;
}

namespace {

std::vector<Integer> cyclic_orders(const CohomologyGroup& g) {
  std::vector<Integer> out(g.free_rank, Integer(0));
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

// Z (x) Z = Z, Z (x) Z/t = Z/t, Z/s (x) Z/t = Z/gcd(s, t); gcd(0, t) = t covers
// the mixed case.
CohomologyGroup tensor(const CohomologyGroup& a, const CohomologyGroup& b) {
  std::vector<Integer> orders;
  for (const auto& s : cyclic_orders(a))
    for (const auto& t : cyclic_orders(b)) orders.push_back(gcd(s, t));
  return CohomologyGroup::from_cyclic_orders(orders);
}

CohomologyGroup tor(const CohomologyGroup& a, const CohomologyGroup& b) {
  std::vector<Integer> orders;
  for (const auto& s : a.torsion)
    for (const auto& t : b.torsion) orders.push_back(gcd(s, t));
  return CohomologyGroup::from_cyclic_orders(orders);
}

std::map<int, CohomologyGroup> kunneth_formula(const std::map<int, CohomologyGroup>& hx,
                                               const std::map<int, CohomologyGroup>& hy) {
  std::map<int, CohomologyGroup> out;
  if (hx.empty() || hy.empty()) return out;
  const int top = std::min(hx.rbegin()->first, hy.rbegin()->first);
  auto get = [](const std::map<int, CohomologyGroup>& h, int n) {
    auto it = h.find(n);
    return it == h.end() ? CohomologyGroup{} : it->second;
  };
  for (int n = 0; n < top; ++n) {
    std::vector<Integer> orders;
    for (int p = 0; p <= n; ++p) {
      auto part = cyclic_orders(tensor(get(hx, p), get(hy, n - p)));
      orders.insert(orders.end(), part.begin(), part.end());
    }
    for (int p = 0; p <= n + 1; ++p) {
      auto part = cyclic_orders(tor(get(hx, p), get(hy, n + 1 - p)));
      orders.insert(orders.end(), part.begin(), part.end());
    }
    out[n] = CohomologyGroup::from_cyclic_orders(orders);
  }
  return out;
}

KunnethReport kunneth_check(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int t) {
  if (t < 1) throw Error("kunneth_check needs truncation >= 1");
  KunnethReport report;
  report.x = x.name();
  report.y = y.name();
  report.truncation = t;
  const int work = t + 1;

  const auto p = product_set(x, y);
  const auto zx = cochain_ring(x, work), zy = cochain_ring(y, work), zp = cochain_ring(p.set, work);
  const auto tensor_ring = degreewise_tensor(zx, zy);
  const auto phi = outer_product_map(p, work);
  auto at = [](int m) { return static_cast<std::size_t>(m); };

  for (int m = 1; m <= work && !report.map_failure; ++m)
    for (std::size_t i = 0; i <= at(m); ++i)
      if (phi[at(m)] * tensor_ring.coface(m, i) != zp.coface(m, i) * phi[at(m - 1)]) {
        report.map_failure = IdentityViolation{"outer product vs coface", m, i, 0};
        break;
      }
  for (int m = 0; m < work && !report.map_failure; ++m)
    for (std::size_t i = 0; i <= at(m); ++i)
      if (phi[at(m)] * tensor_ring.codegeneracy(m, i) != zp.codegeneracy(m, i) * phi[at(m + 1)]) {
        report.map_failure = IdentityViolation{"outer product vs codegeneracy", m, i, 0};
        break;
      }
  report.cosimplicial_map = !report.map_failure;

  const auto source = unnormalized_complex(tensor_ring);
  for (auto& [n, g] : cohomology(source))
    if (n < t) report.tensor_groups[n] = std::move(g);
  if (report.cosimplicial_map) {
    const ComplexMap f(source, unnormalized_complex(zp), phi);
    // H^n(f) is an isomorphism once the cone vanishes in degrees n-1 and n.
    report.quasi_iso = cone_acyclic_in_degrees(f, -1, t - 1);
  }

  for (auto& [n, g] : space_cohomology(p.set, work).groups)
    if (n < t) report.product_groups[n] = std::move(g);
  for (auto& [n, g] : kunneth_formula(space_cohomology(x, work).groups, space_cohomology(y, work).groups))
    if (n < t) report.formula_groups[n] = std::move(g);
  report.formula_matches = report.formula_groups == report.product_groups &&
                           static_cast<int>(report.product_groups.size()) == t;
  return report;
}

}  // namespace binring

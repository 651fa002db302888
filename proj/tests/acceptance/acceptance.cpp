// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only if every criterion passes.

#include "binring/barcobar/cobar.hpp"
#include "binring/barcobar/conservativity.hpp"
#include "binring/binomial/num_poly.hpp"
#include "binring/binomial/witt.hpp"
#include "binring/cosimplicial/models.hpp"
#include "binring/cosimplicial/normalize.hpp"
#include "binring/linalg/random_complex.hpp"
#include "binring/spaces/alpha1.hpp"
#include "binring/spaces/cochains.hpp"
#include "binring/spaces/kunneth.hpp"
#include "binring/spaces/standard.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace binring;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const CohomologyGroup kZ = CohomologyGroup::free(1);

// Every bidegree in the table must match `nonzero` (absent = 0).
void expect_table(Outcome& o, const BidegreeTable& t, const std::map<Bidegree, CohomologyGroup>& nonzero,
                  const std::string& label) {
  for (const auto& [bd, g] : t) {
    auto it = nonzero.find(bd);
    const CohomologyGroup want = it == nonzero.end() ? CohomologyGroup{} : it->second;
    o.require(g == want, label + " at (" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ") is " +
                             g.to_string());
  }
  for (const auto& [bd, g] : nonzero) o.require(t.count(bd) == 1, label + ": bidegree missing from the window");
}

Outcome cobar_num() {
  Outcome o;
  const auto t = cobar_cohomology(num_coalgebra(8), 6, 8);
  expect_table(o, t, {{{0, 0}, kZ}, {{1, 1}, kZ}}, "H^{n,d}");
  o.require(t.size() == 7u * 9u, "window is not n <= 6, d <= 8");
  if (o.pass) o.detail = "Z at (0,0) and (1,1), 0 at the other 61 bidegrees";
  return o;
}

Outcome duality() {
  Outcome o;
  const auto cmp = dual_compare(num_coalgebra(8), 5, 8);
  o.require(cmp.compared > 0, "nothing compared");
  o.require(cmp.equal && cmp.mismatches.empty(), std::to_string(cmp.mismatches.size()) + " differing blocks");
  if (o.pass) o.detail = std::to_string(cmp.compared) + " blocks equal";
  return o;
}

Outcome bar_poly() {
  Outcome o;
  const auto t = bar_homology(polynomial_algebra(8), 5, 8);
  expect_table(o, t, {{{0, 0}, kZ}, {{1, 1}, kZ}}, "H_{n,d}");
  if (o.pass) o.detail = "Z at (0,0) and (1,1) only";
  return o;
}

Outcome coalgebra_laws() {
  Outcome o;
  const std::vector<std::size_t> swap{1, 0};
  std::size_t checked = 0;
  for (unsigned n = 0; n <= 12; ++n) {
    const auto b = NumPoly::basis({n});
    const auto d = diagonal(b);
    const std::string at = "binom(x," + std::to_string(n) + ")";
    o.require(diagonal_at(d, 0) == diagonal_at(d, 1), at + ": not coassociative");
    o.require(permute_variables(d, swap) == d, at + ": not cocommutative");
    o.require(counit_at(d, 0) == b && counit_at(d, 1) == b, at + ": counit fails");
    for (const auto& [alpha, c] : d.terms())
      o.require(total_degree(alpha) == n, at + ": diagonal leaves internal degree " + std::to_string(n));
    o.require(internal_degree(b).value == n, at + ": wrong internal degree");
    ++checked;
  }
  const auto c = num_coalgebra(12);
  if (auto bad = c.validate()) o.require(false, "num coalgebra: " + *bad);
  o.require(c.cocommutative(), "num coalgebra is not cocommutative");
  if (o.pass) o.detail = std::to_string(checked) + " basis elements, block coalgebra validated";
  return o;
}

Outcome binomial_axioms() {
  Outcome o;
  std::size_t checks = 0;
  const auto num = num_binomiality_check(100, 1);
  o.require(num.passed() && num.samples >= 100, "Num[x]: " + num.first_failure);
  checks += num.checks;
  for (const auto& name : {"circle", "sphere2", "torus", "rp2"}) {
    const auto r = binomiality_check(standard_space(name), 3, 100, 1);
    o.require(r.passed() && r.samples >= 100, std::string(name) + ": " + r.first_failure);
    checks += r.checks;
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks on Num[x] and 4 cochain rings";
  return o;
}

Outcome dold_kan() {
  Outcome o;
  const int t = 6;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto norm = normalize(gamma_sphere(n, t));
    std::vector<std::size_t> expected(t + 1, 0);
    expected[n] = 1;
    o.require(norm.complex.ranks() == expected, "N(Gamma(Z[-" + std::to_string(n) + "])) has the wrong ranks");
    const auto h = cohomology(norm.complex);
    for (const auto& [k, g] : h)
      if (k < t) o.require(g == (k == static_cast<int>(n) ? kZ : CohomologyGroup{}), "N(Gamma) cohomology");
  }
  std::vector<std::pair<std::string, CosimplicialAbGroup>> fixtures;
  for (unsigned n = 1; n <= 3; ++n) fixtures.emplace_back("Gamma(Z[-" + std::to_string(n) + "])", gamma_sphere(n, t));
  fixtures.emplace_back("constant Z", constant_z(t));
  fixtures.emplace_back("dual K(Z,1) model", dual(z1_simplicial(t)));
  for (const auto& name : {"point", "circle", "sphere2", "torus", "rp2"})
    fixtures.emplace_back(std::string("Z^") + name, cochain_ring(standard_space(name), 4));
  fixtures.emplace_back("cobar(num) in internal degree 3", cobar_cosimplicial(num_coalgebra(3), 3, 5));
  for (const auto& [name, a] : fixtures) {
    const auto norm = normalize(a);
    o.require(cone_acyclic_in_degrees(norm.inclusion(), -1, a.truncation() - 2), name + ": N -> A is not a quasi-iso");
  }
  if (o.pass) o.detail = std::to_string(fixtures.size()) + " fixtures, N(Gamma(Z[-n])) = Z[-n] for n <= 3";
  return o;
}

Outcome space_tables() {
  Outcome o;
  const CohomologyGroup zero;
  const std::vector<std::pair<std::string, std::vector<CohomologyGroup>>> expected{
      {"circle", {kZ, kZ}},
      {"sphere2", {kZ, zero, kZ}},
      {"torus", {kZ, CohomologyGroup::free(2), kZ}},
      {"rp2", {kZ, zero, CohomologyGroup{0, {Integer(2)}}}},
  };
  for (const auto& [name, groups] : expected) {
    const auto h = space_cohomology(standard_space(name), static_cast<int>(groups.size()) + 1);
    for (std::size_t n = 0; n < groups.size() + 1; ++n) {
      const CohomologyGroup want = n < groups.size() ? groups[n] : zero;
      auto it = h.groups.find(static_cast<int>(n));
      o.require(it != h.groups.end() && it->second == want, name + ": H^" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "S^1, S^2, T^2, RP^2";
  return o;
}

Outcome kunneth() {
  Outcome o;
  for (const auto& [x, y] : {std::pair{"circle", "circle"}, std::pair{"circle", "sphere2"}}) {
    const auto k = kunneth_check(standard_space(x), standard_space(y), 4);
    o.require(k.cosimplicial_map, std::string(x) + " x " + y + ": map is not cosimplicial");
    o.require(k.quasi_iso, std::string(x) + " x " + y + ": not a quasi-isomorphism below 4");
    o.require(k.formula_matches, std::string(x) + " x " + y + ": Kunneth formula mismatch");
  }
  if (o.pass) o.detail = "(S^1,S^1) and (S^1,S^2) below T = 4";
  return o;
}

Outcome alpha1() {
  Outcome o;
  const auto r = alpha1_pointwise_check(6, 500, 1, 3);
  o.require(r.samples >= 500, "fewer than 500 samples");
  o.require(r.discrepancies == 0, std::to_string(r.discrepancies) + " discrepancies, first " + r.first_discrepancy);
  o.require(r.linear_class, "linear cochain is not the generating class");
  if (o.pass) o.detail = std::to_string(r.samples) + " tuples, " + std::to_string(r.checks) + " checks, 0 discrepancies";
  return o;
}

Outcome acyclicity() {
  Outcome o;
  const CochainComplex two(0, {1, 1}, {IntMatrix{{2}}});
  const CochainComplex three(0, {1, 1}, {IntMatrix{{3}}});
  auto c2 = acyclicity_certificate(two);
  o.require(c2.consistent && !c2.acyclic_over_z && c2.acyclic_over_q && c2.witness_primes == std::vector<Integer>{2},
            "Z-2->Z: witness primes are not {2}");
  auto c23 = acyclicity_certificate(direct_sum(two, three));
  o.require(c23.consistent && !c23.acyclic_over_z && c23.witness_primes == std::vector<Integer>{2, 3},
            "(Z-2->Z)+(Z-3->Z): witness primes are not {2,3}");
  auto c1 = acyclicity_certificate(CochainComplex(0, {1, 1}, {IntMatrix{{1}}}));
  o.require(c1.consistent && c1.acyclic_over_z && c1.witness_primes.empty(), "Z-1->Z is not certified acyclic");
  std::mt19937_64 rng(1);
  std::size_t over_z = 0, over_q = 0;
  const std::size_t samples = 60;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto cert = acyclicity_certificate(random_complex(rng));
    o.require(cert.consistent, "random complex " + std::to_string(s) + ": certificates disagree");
    over_z += cert.acyclic_over_z;
    over_q += cert.acyclic_over_q;
  }
  if (o.pass)
    o.detail = std::to_string(samples) + " random complexes (" + std::to_string(over_z) + " acyclic over Z, " +
               std::to_string(over_q) + " over Q) and the {2}, {2,3} fixtures";
  return o;
}

Outcome conservativity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& name : conservativity_examples()) {
    const auto r = conservativity_demo(conservativity_example(name, 6), 4, 6, name);
    o.require(!r.counterexample(), name + ": B(f) is a quasi-iso in the window but f is not");
    ++n;
  }
  o.require(n >= 3, "fewer than three examples");
  if (o.pass) o.detail = std::to_string(n) + " example maps, no contradiction";
  return o;
}

Outcome witt() {
  Outcome o;
  for (const auto& [p, k] : std::vector<std::pair<unsigned long, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto w = frobenius_fixed_points(p, k);
    Integer order;
    mpz_ui_pow_ui(order.get_mpz_t(), p, k);
    const std::string at = "(p,k) = (" + std::to_string(p) + "," + std::to_string(k) + ")";
    o.require(w.closed_under_operations, at + ": not a subring");
    o.require(w.additive_structure == CohomologyGroup{0, {order}}, at + ": fixed subring is " + w.additive_structure.to_string());
    o.require(w.fixed_elements == order, at + ": wrong number of fixed elements");
  }
  if (o.pass) o.detail = "Z/p^k for (2,1) (2,2) (2,3) (3,1) (3,2)";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double budget_s;  // 0 = no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cobar of Num[x], n <= 6, d <= 8", cobar_num, 60},
      {2, "transposed cobar of Num[x] equals bar of Z[x]", duality, 0},
      {3, "bar homology of Z[x]", bar_poly, 0},
      {4, "Num[x] coalgebra laws, d <= 12", coalgebra_laws, 0},
      {5, "binomial ring axioms", binomial_axioms, 0},
      {6, "Dold-Kan normalization", dold_kan, 0},
      {7, "space cohomology tables", space_tables, 30},
      {8, "Kunneth quasi-isomorphism", kunneth, 0},
      {9, "alpha_1 pointwise suite", alpha1, 0},
      {10, "acyclicity certificates", acyclicity, 0},
      {11, "bar conservativity examples", conservativity, 0},
      {12, "Frobenius-fixed Witt vectors", witt, 10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s && o.pass) {
      o.pass = false;
      o.detail = "took longer than " + std::to_string(static_cast<int>(c.budget_s)) + " s";
    }
    failed += !o.pass;
    std::printf("%s %2d  %-48s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

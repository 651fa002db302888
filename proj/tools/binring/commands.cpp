#include "commands.hpp"

#include "binring/barcobar/cobar.hpp"
#include "binring/barcobar/conservativity.hpp"
#include "binring/binomial/witt.hpp"
#include "binring/cosimplicial/models.hpp"
#include "binring/cosimplicial/normalize.hpp"
#include "binring/error.hpp"
#include "binring/linalg/complex_io.hpp"
#include "binring/linalg/random_complex.hpp"
#include "binring/spaces/alpha1.hpp"
#include "binring/spaces/cochains.hpp"
#include "binring/spaces/kunneth.hpp"
#include "binring/spaces/standard.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <random>

namespace binring::cli {

nlohmann::json RunConfig::echo() const {
  nlohmann::json j{{"command", command}, {"args", args}, {"seed", seed}};
  if (window_n) j["window_n"] = *window_n;
  if (window_d) j["window_d"] = *window_d;
  if (truncation) j["truncation"] = *truncation;
  if (samples) j["samples"] = *samples;
  return j;
}

namespace {

std::string arg(const RunConfig& c, std::size_t k, const std::string& fallback) {
  return k < c.args.size() ? c.args[k] : fallback;
}

bool is_file(const std::string& s) { return s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

unsigned long parse_number(const std::string& s, const std::string& what) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(what + " must be a nonnegative integer, got '" + s + "'");
  return v;
}

void no_extra_args(const RunConfig& c, std::size_t allowed) {
  if (c.args.size() > allowed) throw Error(c.command + ": unexpected argument '" + c.args[allowed] + "'");
}

using Expectation = std::map<Bidegree, CohomologyGroup>;

// Compares every bidegree of the window with the expectation (absent = 0).
void check_table(Report& r, const BidegreeTable& table, const Expectation& expected, const std::string& label) {
  for (const auto& [bd, g] : table) {
    auto it = expected.find(bd);
    const CohomologyGroup want = it == expected.end() ? CohomologyGroup{} : it->second;
    r.expect(g == want, label + " at (" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ") is " +
                            g.to_string() + ", expected " + want.to_string());
  }
}

nlohmann::json nonzero_json(const BidegreeTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [bd, g] : t)
    if (!g.is_zero()) out.push_back({{"n", bd.first}, {"d", bd.second}, {"group", to_json(g)}});
  return out;
}

nlohmann::json groups_json(const std::map<int, CohomologyGroup>& h) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [n, g] : h) out[std::to_string(n)] = to_json(g);
  return out;
}

const CohomologyGroup kZ = CohomologyGroup::free(1);

Report cmd_cobar(const RunConfig& c) {
  no_extra_args(c, 1);
  const int n = c.window_n.value_or(6);
  const unsigned d = c.window_d.value_or(8);
  const std::string which = arg(c, 0, "num");
  GradedCoalgebra coalgebra;
  std::optional<Expectation> expected;
  if (which == "num") {
    coalgebra = num_coalgebra(d);
    expected = Expectation{{{0, 0}, kZ}, {{1, 1}, kZ}};
  } else if (which == "trivial") {
    coalgebra = trivial_coalgebra(d);
    expected = Expectation{{{0, 0}, kZ}};
  } else if (which == "divided") {
    coalgebra = divided_type_coalgebra(d);
  } else if (is_file(which)) {
    coalgebra = coalgebra_from_json(read_json(which));
  } else {
    throw Error("cobar: unknown coalgebra '" + which + "' (num, trivial, divided or a .json file)");
  }
  if (auto bad = coalgebra.validate()) throw Error("cobar: " + coalgebra.name() + " is not coassociative: " + *bad);
  const auto table = cobar_cohomology(coalgebra, n, d);
  Report r;
  r.tables.push_back(bidegree_table("cobar cohomology of " + coalgebra.name() + " (nonzero bidegrees)", table));
  if (expected) check_table(r, table, *expected, "H^{n,d}");
  r.result = {{"coalgebra", coalgebra.name()}, {"n_max", n}, {"d_max", d}, {"checked", expected.has_value()},
              {"nonzero", nonzero_json(table)}};
  return r;
}

Report cmd_bar(const RunConfig& c) {
  no_extra_args(c, 1);
  const int n = c.window_n.value_or(5);
  const unsigned d = c.window_d.value_or(8);
  const std::string which = arg(c, 0, "poly");
  GradedAlgebra algebra;
  std::optional<Expectation> expected;
  if (which == "poly") {
    algebra = polynomial_algebra(d);
    expected = Expectation{{{0, 0}, kZ}, {{1, 1}, kZ}};
  } else if (which.rfind("trunc", 0) == 0) {
    algebra = truncated_polynomial_algebra(static_cast<unsigned>(parse_number(which.substr(5), "truncation exponent")), d);
  } else if (is_file(which)) {
    algebra = algebra_from_json(read_json(which));
  } else {
    throw Error("bar: unknown algebra '" + which + "' (poly, truncK or a .json file)");
  }
  if (auto bad = algebra.validate()) throw Error("bar: " + algebra.name() + " is not a valid algebra: " + *bad);
  const auto table = bar_homology(algebra, n, d);
  Report r;
  r.tables.push_back(bidegree_table("bar homology of " + algebra.name() + " (nonzero bidegrees)", table));
  if (expected) check_table(r, table, *expected, "H_{n,d}");
  r.result = {{"algebra", algebra.name()}, {"n_max", n}, {"d_max", d}, {"checked", expected.has_value()},
              {"nonzero", nonzero_json(table)}};
  return r;
}

Report cmd_dualcheck(const RunConfig& c) {
  no_extra_args(c, 1);
  const int n = c.window_n.value_or(5);
  const unsigned d = c.window_d.value_or(8);
  const std::string which = arg(c, 0, "num");
  GradedCoalgebra coalgebra;
  if (which == "num")
    coalgebra = num_coalgebra(d);
  else if (which == "divided")
    coalgebra = divided_type_coalgebra(d);
  else if (is_file(which))
    coalgebra = coalgebra_from_json(read_json(which));
  else
    throw Error("dualcheck: unknown coalgebra '" + which + "'");
  const auto cmp = dual_compare(coalgebra, n, d);
  Report r;
  r.expect(cmp.compared > 0, "no matrices compared");
  Table t{"transpose(cobar) vs bar of the dual algebra", {"n", "d", "status"}, {}};
  for (const auto& [bn, bd] : cmp.mismatches) {
    t.rows.push_back({std::to_string(bn), std::to_string(bd), "differ"});
    r.expect(false, "matrices differ at (" + std::to_string(bn) + "," + std::to_string(bd) + ")");
  }
  r.tables.push_back(std::move(t));
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& [bn, bd] : cmp.mismatches) mismatches.push_back({bn, bd});
  r.result = {{"coalgebra", coalgebra.name()}, {"n_max", n}, {"d_max", d}, {"compared", cmp.compared},
              {"equal", cmp.equal}, {"mismatches", mismatches}};
  return r;
}

FiniteSimplicialSet load_space(const std::string& s) {
  return is_file(s) ? simplicial_set_from_json(read_json(s)) : standard_space(s);
}

// Known answers for the fixtures, below degree t.
std::optional<std::map<int, CohomologyGroup>> expected_space(const std::string& name, int t) {
  std::map<int, CohomologyGroup> h;
  for (int n = 0; n < t; ++n) h[n] = {};
  auto set = [&](int n, CohomologyGroup g) {
    if (n < t) h[n] = std::move(g);
  };
  set(0, kZ);
  if (name == "point" || name.rfind("simplex", 0) == 0) return h;
  if (name == "torus") {
    set(1, CohomologyGroup::free(2));
    set(2, kZ);
    return h;
  }
  if (name == "rp2") {
    set(2, CohomologyGroup{0, {Integer(2)}});
    return h;
  }
  auto sphere_dim = [&]() -> std::optional<int> {
    if (name == "circle") return 1;
    if (name.rfind("sphere", 0) == 0) return static_cast<int>(parse_number(name.substr(6), "sphere dimension"));
    if (name.rfind("boundary", 0) == 0) return static_cast<int>(parse_number(name.substr(8), "boundary dimension")) - 1;
    return std::nullopt;
  }();
  if (!sphere_dim) return std::nullopt;
  if (*sphere_dim == 0) {
    set(0, CohomologyGroup::free(2));
  } else {
    set(*sphere_dim, kZ);
  }
  return h;
}

Report cmd_space(const RunConfig& c) {
  if (c.args.empty()) throw Error("space: name a fixture (" + std::string("point, circle, sphereN, torus, rp2, ...") + ") or a .json file");
  no_extra_args(c, 1);
  const auto x = load_space(c.args[0]);
  const int t = c.truncation.value_or(x.dimension() + 1);
  // A file may carry its own answer: {"expected_cohomology": {"0": "Z", ...}}.
  std::optional<std::map<int, std::string>> stated;
  if (is_file(c.args[0])) {
    const auto j = read_json(c.args[0]);
    if (j.contains("expected_cohomology")) {
      stated.emplace();
      for (const auto& [k, v] : j["expected_cohomology"].items())
        (*stated)[static_cast<int>(parse_number(k, "degree"))] = v.get<std::string>();
    }
  }
  if (auto v = x.validate(t)) throw Error("space: " + x.name() + " violates " + v->to_string());
  const auto h = space_cohomology(x, t);
  Report r;
  r.tables.push_back(cohomology_table("H^n(" + x.name() + "; Z)", h.groups));
  const auto expected = is_file(c.args[0]) ? std::nullopt : expected_space(c.args[0], t);
  if (expected)
    for (const auto& [n, g] : h.groups)
      r.expect(g == expected->at(n), "H^" + std::to_string(n) + " is " + g.to_string() + ", expected " +
                                         expected->at(n).to_string());
  if (stated)
    for (const auto& [n, want] : *stated)
      if (auto it = h.groups.find(n); it != h.groups.end())
        r.expect(it->second.to_string() == want, "H^" + std::to_string(n) + " is " + it->second.to_string() +
                                                     ", file expects " + want);
  nlohmann::json counts = nlohmann::json::array();
  for (int m = 0; m <= t; ++m) counts.push_back(x.simplex_count(static_cast<unsigned>(m)));
  r.result = {{"space", x.name()},   {"truncation", t},          {"dimension", x.dimension()},
              {"simplex_counts", counts}, {"groups", groups_json(h.groups)}, {"warnings", h.warnings},
              {"checked", expected.has_value() || stated.has_value()}};
  return r;
}

Report cmd_kunneth(const RunConfig& c) {
  if (c.args.size() != 2) throw Error("kunneth: needs two spaces");
  const auto x = load_space(c.args[0]), y = load_space(c.args[1]);
  const int t = c.truncation.value_or(4);
  const auto k = kunneth_check(x, y, t);
  Report r;
  r.expect(k.cosimplicial_map, "outer product is not cosimplicial" + (k.map_failure ? ": " + k.map_failure->to_string() : ""));
  r.expect(k.quasi_iso, "outer product is not a quasi-isomorphism below " + std::to_string(t));
  r.expect(k.formula_matches, "H(X x Y) differs from the Kunneth formula");
  Table table{"H^n below " + std::to_string(t), {"degree", "Z^X (x) Z^Y", "Z^(X x Y)", "formula"}, {}};
  for (const auto& [n, g] : k.product_groups) {
    auto get = [n](const std::map<int, CohomologyGroup>& m) {
      auto it = m.find(n);
      return it == m.end() ? std::string("?") : it->second.to_string();
    };
    table.rows.push_back({std::to_string(n), get(k.tensor_groups), g.to_string(), get(k.formula_groups)});
  }
  r.tables.push_back(std::move(table));
  r.result = {{"x", k.x},
              {"y", k.y},
              {"truncation", t},
              {"cosimplicial_map", k.cosimplicial_map},
              {"quasi_iso", k.quasi_iso},
              {"formula_matches", k.formula_matches},
              {"product_groups", groups_json(k.product_groups)}};
  return r;
}

Report cmd_alpha1(const RunConfig& c) {
  no_extra_args(c, 0);
  const unsigned degree = c.window_d.value_or(6);
  const int level = c.window_n.value_or(3);
  if (level < 1) throw Error("alpha1: --window-n must be at least 1");
  const auto a = alpha1_pointwise_check(degree, c.samples.value_or(500), c.seed, static_cast<unsigned>(level));
  Report r;
  r.expect(a.discrepancies == 0, std::to_string(a.discrepancies) + " discrepancies, first: " + a.first_discrepancy);
  r.expect(a.checks > 0, "nothing was checked");
  r.expect(a.linear_class, "the linear cochain does not give the expected degree-1 class");
  r.tables.push_back({"pointwise comparison",
                      {"samples", "checks", "discrepancies", "linear class"},
                      {{std::to_string(a.samples), std::to_string(a.checks), std::to_string(a.discrepancies),
                        a.linear_class ? "yes" : "no"}}});
  r.result = {{"max_degree", a.max_degree}, {"max_level", a.max_level}, {"samples", a.samples},
              {"checks", a.checks},         {"discrepancies", a.discrepancies}, {"linear_class", a.linear_class}};
  return r;
}

Report cmd_binomiality(const RunConfig& c) {
  no_extra_args(c, 1);
  const std::string which = arg(c, 0, "num");
  const std::size_t samples = c.samples.value_or(100);
  const auto b = which == "num" ? num_binomiality_check(samples, c.seed)
                                : binomiality_check(load_space(which), c.truncation.value_or(3), samples, c.seed);
  Report r;
  r.expect(b.passed(), b.failures ? std::to_string(b.failures) + " failures, first: " + b.first_failure
                                  : std::string("nothing was checked"));
  r.tables.push_back({"binomial ring axioms on " + b.subject,
                      {"samples", "checks", "failures"},
                      {{std::to_string(b.samples), std::to_string(b.checks), std::to_string(b.failures)}}});
  r.result = {{"subject", b.subject}, {"samples", b.samples}, {"checks", b.checks}, {"failures", b.failures}};
  return r;
}

Report cmd_witt(const RunConfig& c) {
  if (c.args.size() != 2) throw Error("witt: needs p and k");
  const unsigned long p = parse_number(c.args[0], "p");
  const auto k = static_cast<unsigned>(parse_number(c.args[1], "k"));
  const auto w = frobenius_fixed_points(p, k);
  Integer order;
  mpz_ui_pow_ui(order.get_mpz_t(), p, k);
  Report r;
  r.expect(w.closed_under_operations, "fixed points are not a subring");
  r.expect(w.additive_structure == CohomologyGroup{0, {order}},
           "fixed subring is " + w.additive_structure.to_string() + ", expected Z/" + order.get_str());
  r.tables.push_back({"Frobenius-fixed subring of W(F_" + std::to_string(p) + ")",
                      {"elements", "fixed", "additive group", "order of 1"},
                      {{std::to_string(w.total_elements), std::to_string(w.fixed_elements),
                        w.additive_structure.to_string(), w.order_of_one.get_str()}}});
  r.result = {{"p", p},
              {"k", k},
              {"total_elements", w.total_elements},
              {"fixed_elements", w.fixed_elements},
              {"additive_structure", to_json(w.additive_structure)},
              {"order_of_one", w.order_of_one.get_str()},
              {"cyclic", w.cyclic()}};
  return r;
}

Report cmd_conservativity(const RunConfig& c) {
  no_extra_args(c, 1);
  const int n = c.window_n.value_or(4);
  const unsigned d = c.window_d.value_or(6);
  const std::string which = arg(c, 0, "all");
  std::vector<std::string> names = which == "all" ? conservativity_examples() : std::vector<std::string>{which};
  const auto known = conservativity_examples();
  for (const auto& name : names)
    if (std::find(known.begin(), known.end(), name) == known.end()) throw Error("conservativity: unknown example '" + name + "'");
  Report r;
  Table t{"bar conservativity", {"example", "f qiso", "B(f) qiso in window", "consistent"}, {}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& name : names) {
    const auto rep = conservativity_demo(conservativity_example(name, d), n, d, name);
    r.expect(!rep.counterexample(), name + ": B(f) is a quasi-isomorphism in the window but f is not");
    t.rows.push_back({name, rep.f_qiso ? "yes" : "no", rep.bar_qiso ? "yes" : "no", rep.counterexample() ? "NO" : "yes"});
    rows.push_back({{"example", name}, {"f_qiso", rep.f_qiso}, {"bar_qiso", rep.bar_qiso}, {"bar_failures", rep.bar_failures}});
  }
  r.tables.push_back(std::move(t));
  r.result = {{"n_max", n}, {"d_max", d}, {"examples", rows}};
  return r;
}

Report cmd_acyclic(const RunConfig& c) {
  no_extra_args(c, 1);
  std::vector<std::pair<std::string, CochainComplex>> complexes;
  std::map<std::string, std::vector<Integer>> expected_witnesses;
  if (!c.args.empty()) {
    complexes.emplace_back(c.args[0], complex_from_json(read_json(c.args[0])));
  } else {
    const CochainComplex two(0, {1, 1}, {IntMatrix{{2}}});
    const CochainComplex three(0, {1, 1}, {IntMatrix{{3}}});
    complexes.emplace_back("Z-1->Z", CochainComplex(0, {1, 1}, {IntMatrix{{1}}}));
    complexes.emplace_back("Z-2->Z", two);
    complexes.emplace_back("(Z-2->Z)+(Z-3->Z)", direct_sum(two, three));
    expected_witnesses = {{"Z-1->Z", {}}, {"Z-2->Z", {Integer(2)}}, {"(Z-2->Z)+(Z-3->Z)", {Integer(2), Integer(3)}}};
    std::mt19937_64 rng(c.seed);
    const std::size_t samples = c.samples.value_or(50);
    for (std::size_t s = 0; s < samples; ++s) complexes.emplace_back("random " + std::to_string(s), random_complex(rng));
  }
  Report r;
  Table t{"acyclicity certificates", {"complex", "acyclic over Z", "over Q", "witness primes", "consistent"}, {}};
  std::size_t consistent = 0;
  for (const auto& [name, cx] : complexes) {
    const auto cert = acyclicity_certificate(cx);
    consistent += cert.consistent;
    r.expect(cert.consistent, name + ": field verdicts disagree with the integral one");
    std::string primes;
    for (const auto& p : cert.witness_primes) primes += (primes.empty() ? "" : " ") + p.get_str();
    if (auto it = expected_witnesses.find(name); it != expected_witnesses.end())
      r.expect(cert.witness_primes == it->second, name + ": witness primes {" + primes + "}");
    t.rows.push_back({name, cert.acyclic_over_z ? "yes" : "no", cert.acyclic_over_q ? "yes" : "no",
                      primes.empty() ? "-" : primes, cert.consistent ? "yes" : "no"});
  }
  r.tables.push_back(std::move(t));
  r.result = {{"complexes", complexes.size()}, {"consistent", consistent}};
  return r;
}

Report cmd_doldkan(const RunConfig& c) {
  no_extra_args(c, 0);
  const int n_max = c.window_n.value_or(3);
  const int t = c.truncation.value_or(6);
  if (n_max < 1 || t < n_max) throw Error("doldkan: needs 1 <= --window-n <= --truncation");
  Report r;
  Table table{"normalized complexes", {"object", "ranks of N", "N -> A quasi-iso"}, {}};
  auto add = [&](const std::string& name, const CosimplicialAbGroup& a, const std::vector<std::size_t>* expected) {
    if (auto v = a.validate()) r.expect(false, name + " violates " + v->to_string());
    const auto norm = normalize(a);
    const bool qiso = cone_acyclic_in_degrees(norm.inclusion(), -1, a.truncation() - 2);
    r.expect(qiso, name + ": N -> A is not a quasi-isomorphism");
    if (expected) r.expect(norm.complex.ranks() == *expected, name + ": N has unexpected ranks");
    std::string ranks;
    for (auto k : norm.complex.ranks()) ranks += (ranks.empty() ? "" : " ") + std::to_string(k);
    table.rows.push_back({name, ranks, qiso ? "yes" : "no"});
  };
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::size_t> expected(static_cast<std::size_t>(t) + 1, 0);
    expected[static_cast<std::size_t>(n)] = 1;
    add("Gamma(Z[" + std::to_string(n) + "])^dual", gamma_sphere(static_cast<unsigned>(n), t), &expected);
  }
  add("constant Z", constant_z(t), nullptr);
  add("dual of the K(Z,1) model", dual(z1_simplicial(t)), nullptr);
  for (const auto& name : {"circle", "sphere2", "torus", "rp2"})
    add(std::string("Z^") + name, cochain_ring(standard_space(name), std::min(t, 4)), nullptr);
  r.tables.push_back(std::move(table));
  r.result = {{"window_n", n_max}, {"truncation", t}};
  return r;
}

using Command = std::function<Report(const RunConfig&)>;

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"cobar", cmd_cobar},     {"bar", cmd_bar},         {"dualcheck", cmd_dualcheck},
      {"space", cmd_space},     {"kunneth", cmd_kunneth}, {"alpha1", cmd_alpha1},
      {"binomiality", cmd_binomiality}, {"witt", cmd_witt}, {"conservativity", cmd_conservativity},
      {"acyclic", cmd_acyclic}, {"doldkan", cmd_doldkan},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, cmd] : commands()) out.push_back(name);
  return out;
}

Report run(const RunConfig& config) {
  auto it = commands().find(config.command);
  if (it == commands().end()) throw Error("unknown command '" + config.command + "'");
  Report r = it->second(config);
  r.command = config.command;
  r.config = config.echo();
  return r;
}

}  // namespace binring::cli

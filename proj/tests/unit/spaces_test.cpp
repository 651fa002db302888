#include "binring/cosimplicial/normalize.hpp"
#include "binring/error.hpp"
#include "binring/spaces/alpha1.hpp"
#include "binring/spaces/cochains.hpp"
#include "binring/spaces/kunneth.hpp"
#include "binring/spaces/standard.hpp"

#include <gtest/gtest.h>

using namespace binring;

namespace {

CohomologyGroup z(std::size_t r = 1) { return CohomologyGroup::free(r); }
CohomologyGroup zero() { return {}; }
CohomologyGroup cyclic(long t) { return {0, {Integer(t)}}; }

std::vector<CohomologyGroup> groups(const std::map<int, CohomologyGroup>& h) {
  std::vector<CohomologyGroup> out;
  for (const auto& [n, g] : h) out.push_back(g);
  return out;
}

}  // namespace

TEST(SimplicialSet, SimplexCountsMatchEnumeration) {
  for (const auto& name : standard_space_names()) {
    auto x = standard_space(name);
    for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(x.simplices(m).size(), x.simplex_count(m)) << name << " " << m;
  }
  // 3 vertices and 3 edges, plus one degenerate edge per vertex.
  EXPECT_EQ(simplex(2).simplex_count(1), 6u);
  EXPECT_EQ(circle().core_count(0), 1u);
  EXPECT_EQ(circle().core_count(1), 1u);
  for (unsigned m = 0; m <= 5; ++m) EXPECT_EQ(circle().simplex_count(m), m + 1);
}

TEST(SimplicialSet, FixturesSatisfySimplicialIdentities) {
  for (const auto& name : standard_space_names()) EXPECT_FALSE(standard_space(name).validate(5).has_value()) << name;
  EXPECT_FALSE(product(rp2(), circle()).validate(4).has_value());
}

TEST(SimplicialSet, DetectsBrokenFaces) {
  // A 2-simplex whose faces do not glue: d0 d0 != d0 d1 on the edge labels.
  std::vector<std::vector<std::string>> names{{"a", "b"}, {"e"}, {"t"}};
  std::vector<std::vector<std::vector<FaceRecord>>> faces(3);
  faces[1] = {{{1, {0}}, {0, {0}}}};
  faces[2] = {{{0, {0, 1}}, {0, {0, 1}}, {0, {0, 1}}}};
  FiniteSimplicialSet bad("bad", names, faces);
  EXPECT_TRUE(bad.validate(3).has_value());
}

TEST(SimplicialSet, RejectsMalformedRecords) {
  std::vector<std::vector<std::string>> names{{"v"}, {"e"}};
  std::vector<std::vector<std::vector<FaceRecord>>> faces(2);
  faces[1] = {{{0, {0}}}};  // one face instead of two
  EXPECT_THROW(FiniteSimplicialSet("bad", names, faces), Error);
  faces[1] = {{{0, {0}}, {0, {1}}}};  // not a surjection word
  EXPECT_THROW(FiniteSimplicialSet("bad", names, faces), Error);
  EXPECT_THROW(standard_space("klein"), Error);
}

TEST(SimplicialSet, FaceOfDegenerateSimplexUsesNormalForm) {
  auto s2 = sphere(2);
  // s_0 of the 2-cell; its face d_1 is the cell itself, d_2 lands on the
  // degenerate vertex.
  Simplex cell{2, 0, {0, 1, 2}};
  Simplex deg = FiniteSimplicialSet::degeneracy(cell, 0);
  EXPECT_EQ(s2.face(deg, 0), cell);
  EXPECT_EQ(s2.face(deg, 1), cell);
  EXPECT_EQ(s2.face(deg, 2), (Simplex{0, 0, {0, 0, 0}}));
}

TEST(SimplicialSet, JsonRoundTrip) {
  for (const auto& x : {rp2(), torus(), sphere(3)}) {
    auto back = simplicial_set_from_json(to_json(x));
    EXPECT_EQ(to_json(back), to_json(x));
    EXPECT_EQ(back.chains(3), x.chains(3));
  }
  auto unknown = nlohmann::json::parse(R"({"simplices": [[{"name": "v"}], [{"name": "e", "faces": [["w", [0]], ["v", [0]]]}]]})");
  EXPECT_THROW(simplicial_set_from_json(unknown), Error);
}

TEST(Product, TorusHasTwoNondegenerateTriangles) {
  auto t = torus();
  EXPECT_EQ(t.core_count(0), 1u);
  EXPECT_EQ(t.core_count(1), 3u);
  EXPECT_EQ(t.core_count(2), 2u);
  for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(t.simplex_count(m), (m + 1) * (m + 1));
}

TEST(Product, SimplexTimesSimplexShuffles) {
  // Delta^1 x Delta^1: 4 vertices, 5 edges, 2 triangles.
  auto p = product(simplex(1), simplex(1));
  EXPECT_EQ(p.core_count(0), 4u);
  EXPECT_EQ(p.core_count(1), 5u);
  EXPECT_EQ(p.core_count(2), 2u);
  EXPECT_EQ(p.dimension(), 2);
}

TEST(CochainRing, PointIsConstantZ) {
  auto a = cochain_ring(point(), 4);
  EXPECT_FALSE(a.validate().has_value());
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(a.rank(m), 1u);
  for (int m = 1; m <= 4; ++m)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) EXPECT_EQ(a.coface(m, i), IntMatrix::identity(1));
}

TEST(CochainRing, CofacesAreTransposedFaces) {
  auto x = rp2();
  auto a = cochain_ring(x, 3);
  auto c = x.chains(3);
  for (int m = 1; m <= 3; ++m)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) EXPECT_EQ(a.coface(m, i), c.face(m, i).transpose());
  EXPECT_EQ(cochain_ring(circle(), 5).ranks(), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
}

TEST(SpaceCohomology, StandardTables) {
  EXPECT_EQ(groups(space_cohomology(circle(), 2).groups), (std::vector{z(), z()}));
  EXPECT_EQ(groups(space_cohomology(sphere(2), 3).groups), (std::vector{z(), zero(), z()}));
  EXPECT_EQ(groups(space_cohomology(torus(), 3).groups), (std::vector{z(), z(2), z()}));
  EXPECT_EQ(groups(space_cohomology(rp2(), 3).groups), (std::vector{z(), zero(), cyclic(2)}));
  EXPECT_EQ(groups(space_cohomology(boundary(3), 4).groups), (std::vector{z(), zero(), z(), zero()}));
  EXPECT_EQ(groups(space_cohomology(simplex(3), 4).groups), (std::vector{z(), zero(), zero(), zero()}));
  EXPECT_EQ(groups(space_cohomology(sphere(0), 1).groups), (std::vector{z(2)}));
}

TEST(SpaceCohomology, WarnsWhenTruncationIsTooSmall) {
  auto h = space_cohomology(sphere(2), 2);
  EXPECT_FALSE(h.warnings.empty());
  EXPECT_TRUE(space_cohomology(sphere(2), 3).warnings.empty());
}

TEST(SpaceCohomology, NormalizedInclusionIsQuasiIso) {
  for (const auto& x : {circle(), rp2(), torus()}) {
    auto norm = normalize(cochain_ring(x, 4));
    EXPECT_TRUE(cone_acyclic_in_degrees(norm.inclusion(), -1, 2)) << x.name();
  }
}

TEST(Kunneth, GroupArithmetic) {
  EXPECT_EQ(tensor(z(2), cyclic(6)), (CohomologyGroup{0, {Integer(6), Integer(6)}}));
  EXPECT_EQ(tensor(cyclic(4), cyclic(6)), cyclic(2));
  EXPECT_EQ(tor(z(3), cyclic(6)), zero());
  EXPECT_EQ(tor(cyclic(4), cyclic(6)), cyclic(2));
}

TEST(Kunneth, CircleTimesCircle) {
  auto k = kunneth_check(circle(), circle(), 4);
  EXPECT_TRUE(k.cosimplicial_map);
  EXPECT_TRUE(k.quasi_iso);
  EXPECT_TRUE(k.formula_matches);
  EXPECT_EQ(groups(k.product_groups), (std::vector{z(), z(2), z(), zero()}));
  EXPECT_EQ(k.tensor_groups, k.product_groups);
}

TEST(Kunneth, CircleTimesSphere) {
  auto k = kunneth_check(circle(), sphere(2), 4);
  EXPECT_TRUE(k.passed());
  EXPECT_EQ(groups(k.product_groups), (std::vector{z(), z(), z(), z()}));
}

TEST(Kunneth, TorsionEntersThroughTor) {
  // H^*(RP^2 x S^1) = Z, Z, Z/2, Z/2; no Tor term since S^1 is free.
  auto k = kunneth_check(rp2(), circle(), 4);
  EXPECT_TRUE(k.passed());
  EXPECT_EQ(groups(k.product_groups), (std::vector{z(), z(), cyclic(2), cyclic(2)}));
  std::map<int, CohomologyGroup> h{{0, z()}, {1, zero()}, {2, cyclic(2)}, {3, zero()}, {4, zero()}, {5, zero()}};
  auto f = kunneth_formula(h, h);
  EXPECT_EQ(f.at(2), (CohomologyGroup{0, {Integer(2), Integer(2)}}));
  EXPECT_EQ(f.at(3), cyclic(2));
  EXPECT_EQ(f.at(4), cyclic(2));
}

TEST(Kunneth, PointTimesPointIsIsomorphism) {
  auto p = product_set(point(), point());
  for (const auto& phi : outer_product_map(p, 3)) EXPECT_EQ(phi, IntMatrix::identity(1));
  EXPECT_TRUE(kunneth_check(point(), point(), 3).passed());
}

TEST(Binomiality, SmallExamples) {
  EXPECT_EQ(binomial(Integer(-3), 2), 6);
  EXPECT_EQ(binomial(Integer(1), 2), 0);
  EXPECT_EQ(binomial(Integer(0), 2), 0);
}

TEST(Binomiality, CochainRingsAndNum) {
  for (const auto& x : {torus(), rp2(), sphere(2)}) {
    auto r = binomiality_check(x, 3, 100, 11);
    EXPECT_TRUE(r.passed()) << x.name() << ": " << r.first_failure;
  }
  auto n = num_binomiality_check(100, 5);
  EXPECT_TRUE(n.passed()) << n.first_failure;
}

TEST(Alpha1, VandermondeInstance) {
  const std::vector<Integer> a{2, 3};
  EXPECT_EQ(coface_value({2}, 1, a), 10);
  EXPECT_EQ(predicted_coface_value({2}, 1, a), 10);
  // Outer cofaces on the unit.
  EXPECT_EQ(coface_value({}, 0, {Integer(7)}), 1);
  EXPECT_EQ(predicted_coface_value({}, 1, {Integer(7)}), 1);
}

TEST(Alpha1, FacesOfTheModel) {
  const std::vector<Integer> a{1, 2, 3};
  EXPECT_EQ(k1_face(a, 0), (std::vector<Integer>{2, 3}));
  EXPECT_EQ(k1_face(a, 1), (std::vector<Integer>{3, 3}));
  EXPECT_EQ(k1_face(a, 2), (std::vector<Integer>{1, 5}));
  EXPECT_EQ(k1_face(a, 3), (std::vector<Integer>{1, 2}));
  EXPECT_EQ(k1_degeneracy(a, 1), (std::vector<Integer>{1, 0, 2, 3}));
}

TEST(Alpha1, PointwiseSuiteHasNoDiscrepancy) {
  auto r = alpha1_pointwise_check(6, 500, 2024);
  EXPECT_EQ(r.discrepancies, 0u) << r.first_discrepancy;
  EXPECT_TRUE(r.linear_class);
  EXPECT_GT(r.checks, 10000u);
}

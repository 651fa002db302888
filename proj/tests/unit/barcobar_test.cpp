#include "binring/barcobar/cobar.hpp"
#include "binring/barcobar/conservativity.hpp"
#include "binring/cosimplicial/normalize.hpp"
#include "binring/error.hpp"

#include <gtest/gtest.h>

using namespace binring;

namespace {

CohomologyGroup z() { return CohomologyGroup::free(1); }
CohomologyGroup torsion(long t) { return CohomologyGroup::from_cyclic_orders({Integer(t)}); }

void expect_table(const BidegreeTable& got, const std::map<Bidegree, CohomologyGroup>& nonzero) {
  for (const auto& [b, g] : got) {
    auto it = nonzero.find(b);
    if (it == nonzero.end())
      EXPECT_TRUE(g.is_zero()) << "(" << b.first << "," << b.second << ") = " << g.to_string();
    else
      EXPECT_EQ(g, it->second) << "(" << b.first << "," << b.second << ") = " << g.to_string();
  }
  for (const auto& [b, g] : nonzero) EXPECT_TRUE(got.count(b)) << b.first << "," << b.second;
}

}  // namespace

TEST(Coalgebra, NumIsCoassociativeAndCocommutative) {
  auto c = num_coalgebra(12);
  EXPECT_FALSE(c.validate().has_value());
  EXPECT_TRUE(c.cocommutative());
  EXPECT_EQ(c.diagonal(5, 2), (IntMatrix{{1}}));
}

TEST(Coalgebra, RandomCoalgebrasAreCoassociative) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto c = random_coalgebra(5, seed);
    EXPECT_FALSE(c.validate().has_value()) << c.name();
    EXPECT_EQ(coalgebra_from_json(to_json(c)).diagonal(4, 2), c.diagonal(4, 2));
  }
}

TEST(Coalgebra, CorruptedDiagonalIsReported) {
  auto c = divided_type_coalgebra(4);
  EXPECT_FALSE(c.validate().has_value());
  auto j = to_json(c);
  j["diagonal"][3][0]["entries"][0][2] = "4";
  auto bad = coalgebra_from_json(j);
  ASSERT_TRUE(bad.validate().has_value());
}

TEST(Algebra, RejectsDegreeZeroPart) {
  EXPECT_THROW(GradedAlgebra("bad", {1, 1}, {}), Error);
}

TEST(Algebra, DualOfNumIsPolynomial) {
  auto a = dual_algebra(num_coalgebra(6));
  auto p = polynomial_algebra(6);
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = 1; i + j <= 6; ++j) EXPECT_EQ(a.product(i, j), p.product(i, j));
  EXPECT_FALSE(a.validate().has_value());
  EXPECT_FALSE(truncated_polynomial_algebra(3, 6).validate().has_value());
}

TEST(Cobar, NumRanksAndDifferential) {
  auto c = cobar_complex(num_coalgebra(8), 6, 8);
  EXPECT_EQ(c.rank(2, 4), 3u);
  for (unsigned d = 1; d <= 8; ++d)
    for (int n = 1; n <= 6; ++n) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), d - 1, static_cast<unsigned long>(n - 1));
      EXPECT_EQ(Integer(c.rank(n, d)), b);
    }
  IntMatrix d12 = c.differential(1, 2);
  ASSERT_EQ(d12.rows(), 1u);
  ASSERT_EQ(d12.cols(), 1u);
  EXPECT_EQ(abs(d12.at(0, 0)), 1);
}

TEST(Cobar, NumCohomologyWindow) {
  expect_table(cobar_cohomology(num_coalgebra(8), 6, 8), {{{0, 0}, z()}, {{1, 1}, z()}});
}

TEST(Cobar, EulerCharacteristicVanishes) {
  auto c = cobar_complex(num_coalgebra(8), 8, 8);
  for (unsigned d = 2; d <= 8; ++d) {
    long chi = 0;
    for (int n = 0; n <= 8; ++n) chi += (n % 2 ? -1 : 1) * static_cast<long>(c.rank(n, d));
    EXPECT_EQ(chi, 0) << d;
  }
}

TEST(Cobar, TrivialCoalgebra) {
  expect_table(cobar_cohomology(trivial_coalgebra(4), 3, 4), {{{0, 0}, z()}});
}

TEST(Cobar, DividedTypeOracle) {
  expect_table(cobar_cohomology(divided_type_coalgebra(5), 5, 5),
               {{{0, 0}, z()},
                {{1, 1}, z()},
                {{2, 2}, torsion(2)},
                {{2, 3}, torsion(3)},
                {{3, 3}, torsion(2)},
                {{2, 4}, torsion(2)},
                {{3, 4}, torsion(3)},
                {{4, 4}, torsion(2)},
                {{2, 5}, torsion(5)},
                {{3, 5}, torsion(2)},
                {{5, 5}, torsion(2)}});
}

TEST(Cobar, WindowMustSitBelowDiagonal) {
  EXPECT_THROW(cobar_complex(num_coalgebra(4), 5, 4), Error);
  EXPECT_THROW(cobar_complex(num_coalgebra(4), 2, 6), Error);
}

TEST(Cobar, AgreesWithNormalizedCosimplicialObject) {
  const int t = 5;
  for (const auto& c : {num_coalgebra(6), divided_type_coalgebra(5), random_coalgebra(5, 3), random_coalgebra(5, 4)}) {
    const unsigned top = std::min(c.d_max(), 5u);
    auto cobar = cobar_complex(c, t, std::max<unsigned>(top, t));
    for (unsigned d = 0; d <= top; ++d) {
      auto a = cobar_cosimplicial(c, d, t);
      ASSERT_FALSE(a.validate().has_value()) << c.name() << " d=" << d;
      auto norm = normalize(a);
      for (int n = 0; n <= t; ++n) EXPECT_EQ(norm.complex.rank(n), cobar.rank(n, d));
      for (int n = 0; n < t; ++n) EXPECT_EQ(norm.complex.differential(n), cobar.differential(n, d)) << c.name();
      EXPECT_TRUE(cone_acyclic_in_degrees(norm.inclusion(), 0, t - 1));
    }
  }
}

TEST(Bar, PolynomialAlgebra) {
  expect_table(bar_homology(polynomial_algebra(8), 5, 8), {{{0, 0}, z()}, {{1, 1}, z()}});
}

TEST(Bar, DualNumbers) {
  std::map<Bidegree, CohomologyGroup> expected;
  for (int n = 0; n <= 5; ++n) expected[{n, static_cast<unsigned>(n)}] = z();
  expect_table(bar_homology(truncated_polynomial_algebra(2, 6), 5, 6), expected);
}

TEST(Bar, SquareZeroHasZeroDifferential) {
  auto a = square_zero_algebra({0, 2, 1, 0});
  auto bar = bar_complex(a, 3, 3);
  auto h = bigraded_cohomology(bar);
  for (const auto& [b, g] : h) EXPECT_EQ(g, CohomologyGroup::free(bar.rank(b.first, b.second)));
  EXPECT_EQ(bar.rank(2, 2), 4u);
  EXPECT_EQ(bar.rank(2, 3), 4u);
}

TEST(Duality, TransposedCobarIsBar) {
  auto r = dual_compare(num_coalgebra(8), 5, 8);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.compared, 45u);
  EXPECT_TRUE(dual_compare(trivial_coalgebra(3), 2, 3).equal);
  for (std::uint64_t seed = 10; seed < 14; ++seed) EXPECT_TRUE(dual_compare(random_coalgebra(5, seed), 4, 5).equal);
}

TEST(Filtration, SlicesAndStabilization) {
  auto c = num_coalgebra(6);
  auto f1 = filtration_quotients(c, 1, 6);
  EXPECT_EQ(f1.slice_ranks[0], 1u);
  for (unsigned d = 1; d <= 6; ++d) EXPECT_EQ(f1.slice_ranks[d], 0u);
  auto f3 = filtration_quotients(c, 3, 6);
  for (unsigned d = 2; d <= 6; ++d) EXPECT_EQ(f3.slice_ranks[d], d - 1);  // compositions of d into 2 parts
  auto full = cobar_complex(c, 6, 6);
  for (unsigned n = 1; n <= 7; ++n) {
    auto f = filtration_quotients(c, n, 6);
    for (unsigned d = 0; d < n && d <= 6; ++d)
      for (int k = 0; k + 1 < static_cast<int>(n); ++k)
        EXPECT_EQ(f.quotient.differential(k, d), full.differential(k, d));
  }
}

TEST(Conservativity, NamedExamples) {
  auto id = conservativity_demo(conservativity_example("identity", 6), 4, 6, "identity");
  EXPECT_TRUE(id.f_qiso);
  EXPECT_TRUE(id.bar_qiso);
  auto dbl = conservativity_demo(conservativity_example("double", 6), 4, 6, "double");
  EXPECT_FALSE(dbl.f_qiso);
  EXPECT_FALSE(dbl.bar_qiso);
  auto quo = conservativity_demo(conservativity_example("quotient", 6), 4, 6, "quotient");
  EXPECT_FALSE(quo.f_qiso);
  EXPECT_FALSE(quo.bar_qiso);
  EXPECT_NE(std::find(quo.bar_failures.begin(), quo.bar_failures.end(), 2u), quo.bar_failures.end());
  auto dg = conservativity_demo(conservativity_example("dg-unit", 4), 4, 4, "dg-unit");
  EXPECT_TRUE(dg.f_qiso);
  EXPECT_TRUE(dg.bar_qiso);
  for (const auto& r : {id, dbl, quo, dg}) EXPECT_FALSE(r.counterexample());
  EXPECT_THROW(conservativity_example("nope", 3), Error);
}

TEST(Conservativity, RejectsNonMultiplicativeMap) {
  auto a = polynomial_algebra(3);
  std::vector<IntMatrix> comps{IntMatrix(0, 0), IntMatrix{{2}}, IntMatrix{{2}}, IntMatrix{{8}}};
  EXPECT_THROW(AlgebraMap(a, a, comps), Error);
}

TEST(Bar, DgAlgebraValidatesAndBarIsComplex) {
  auto f = conservativity_example("dg-unit", 4);
  EXPECT_FALSE(f.target().validate().has_value());
  auto bar = bar_complex(f.target(), 4, 4);
  auto h = bigraded_cohomology(bar);
  for (const auto& [b, g] : h) {
    if (b.second == 0 && b.first == 0)
      EXPECT_EQ(g, z());
    else
      EXPECT_TRUE(g.is_zero()) << b.first << "," << b.second;
  }
}

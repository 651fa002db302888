#include "binring/cosimplicial/cosimplicial_io.hpp"
#include "binring/cosimplicial/models.hpp"
#include "binring/cosimplicial/normalize.hpp"
#include "binring/linalg/cohomology.hpp"

#include <gtest/gtest.h>

using namespace binring;

TEST(Cosimplicial, ConstantZ) {
  auto a = constant_z(5);
  EXPECT_FALSE(a.validate().has_value());
  auto n = normalized_complex(a);
  EXPECT_EQ(n.ranks(), (std::vector<std::size_t>{1, 0, 0, 0, 0, 0}));
  auto u = unnormalized_complex(a);
  EXPECT_TRUE(u.differential(0).is_zero());
  EXPECT_EQ(u.differential(1), IntMatrix::identity(1));
  EXPECT_TRUE(u.differential(2).is_zero());
  EXPECT_EQ(dual(dual(a)), a);
  EXPECT_EQ(dual(dual(a)).ranks(), a.ranks());
}

TEST(Cosimplicial, FaultInjectionNamesIdentity) {
  auto a = constant_z(3);
  a.set_coface(2, 1, IntMatrix{{2}});
  auto v = a.validate();
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->identity, "d^j d^i = d^i d^(j-1)");
  EXPECT_FALSE(v->to_string().empty());
}

TEST(Z1, FacesMatchDescription) {
  auto z1 = z1_simplicial(4);
  EXPECT_FALSE(z1.validate().has_value());
  EXPECT_EQ(z1.face(2, 1), (IntMatrix{{1, 1}}));
  EXPECT_EQ(z1.face(2, 0), (IntMatrix{{0, 1}}));
  EXPECT_EQ(z1.face(2, 2), (IntMatrix{{1, 0}}));
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(z1.rank(m), static_cast<std::size_t>(m));
}

TEST(Z1, DualHasDiagonalCofaces) {
  auto a = dual(z1_simplicial(4));
  EXPECT_FALSE(a.validate().has_value());
  EXPECT_EQ(a.coface(2, 1), (IntMatrix{{1}, {1}}));
  auto n = normalized_complex(a);
  EXPECT_EQ(n.ranks(), (std::vector<std::size_t>{0, 1, 0, 0, 0}));
  // Unnormalized ranks 0, 1, 2, 3, 4.
  EXPECT_EQ(unnormalized_complex(a).ranks(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(dual(dual(z1_simplicial(3))), z1_simplicial(3));
}

TEST(Gamma, RanksCountSurjections) {
  EXPECT_EQ(surjections(4, 2).size(), 6u);
  auto g = gamma_sphere(2, 5);
  EXPECT_EQ(g.rank(4), 6u);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(gamma_sphere(1, 5).rank(m), static_cast<std::size_t>(m));
}

TEST(Gamma, SphereComplexesAreDoldKanUnits) {
  for (unsigned n = 1; n <= 3; ++n)
    for (int t = static_cast<int>(n); t <= 6; ++t) {
      auto g = gamma_sphere(n, t);
      ASSERT_FALSE(g.validate().has_value()) << n << " " << t;
      auto norm = normalize(g);
      std::vector<std::size_t> expected(static_cast<std::size_t>(t) + 1, 0);
      expected[n] = 1;
      EXPECT_EQ(norm.complex.ranks(), expected);
      EXPECT_TRUE(cone_acyclic_in_degrees(norm.inclusion(), 0, t - 1));
    }
}

TEST(Gamma, OneSphereIsDualOfZ1) {
  // e_j in the K(Z,1) model corresponds to the surjection jumping at j.
  const int t = 5;
  auto g = gamma_sphere(1, t);
  auto z = dual(z1_simplicial(t));
  auto perm = [&](int m) {
    auto surj = surjections(static_cast<unsigned>(m), 1);
    IntMatrix p(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < surj.size(); ++k) {
      std::size_t jump = 0;
      while (surj[k][jump] == 0) ++jump;
      p.set(k, jump - 1, 1);
    }
    return p;
  };
  for (int m = 1; m <= t; ++m)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) {
      // z-coordinates -> gamma-coordinates.
      EXPECT_EQ(perm(m) * z.coface(m, i), g.coface(m, i) * perm(m - 1));
    }
}

TEST(Normalization, InclusionIsQuasiIsoOnModels) {
  for (const auto& a : {constant_z(4), dual(z1_simplicial(5)), gamma_sphere(2, 5)}) {
    auto norm = normalize(a);
    EXPECT_TRUE(cone_acyclic_in_degrees(norm.inclusion(), 0, a.truncation() - 1));
  }
}

TEST(CosimplicialIO, RoundTrip) {
  auto a = gamma_sphere(2, 4);
  EXPECT_EQ(cosimplicial_from_json(to_json(a)), a);
  auto s = z1_simplicial(3);
  EXPECT_EQ(simplicial_from_json(to_json(s)), s);
}

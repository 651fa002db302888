#include "binring/error.hpp"
#include "binring/linalg/cohomology.hpp"
#include "binring/linalg/complex_io.hpp"
#include "binring/linalg/field_rank.hpp"
#include "binring/linalg/hermite.hpp"
#include "binring/linalg/random_complex.hpp"
#include "binring/linalg/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace binring;

TEST(Smith, ZeroMatrix) {
  IntMatrix a(2, 3);
  auto s = smith_normal_form(a);
  EXPECT_TRUE(s.D.is_zero());
  EXPECT_EQ(s.U, IntMatrix::identity(2));
  EXPECT_EQ(s.V, IntMatrix::identity(3));
  EXPECT_TRUE(verify_smith(a, s));
}

TEST(Smith, TwoByTwoOracle) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.invariants, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(s.D, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_TRUE(verify_smith(a, s));
}

TEST(Smith, DivisibilityOrder) {
  IntMatrix a{{6, 0}, {0, 2}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.invariants, (std::vector<Integer>{2, 6}));
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_TRUE(verify_smith(a, s));
}

TEST(Smith, RandomVerifyAndPathsAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 9, 0.5);
    auto dense = smith_normal_form(a);
    SmithOptions sparse_opts;
    sparse_opts.force_sparse = true;
    auto sparse = smith_normal_form(a, sparse_opts);
    ASSERT_TRUE(verify_smith(a, dense)) << a;
    ASSERT_TRUE(verify_smith(a, sparse)) << a;
    EXPECT_EQ(dense.invariants, sparse.invariants);
    EXPECT_EQ(dense.D, sparse.D);
    EXPECT_EQ(invariant_factors(a), dense.invariants);
    EXPECT_EQ(integer_rank(a), rank_over(a, Coefficients::rationals()));
  }
}

TEST(Smith, LargeSparseAboveThreshold) {
  std::mt19937_64 rng(11);
  IntMatrix a = random_matrix(rng, 80, 90, 3, 0.05);
  auto s = smith_normal_form(a);
  EXPECT_TRUE(verify_smith(a, s));
  EXPECT_EQ(s.rank(), rank_over(a, Coefficients::rationals()));
}

TEST(Smith, KernelIsKernelAndSummand) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 7, 5, 0.6);
    IntMatrix k = integer_kernel(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(k.cols(), 7 - integer_rank(a));
    for (const auto& f : invariant_factors(k)) EXPECT_EQ(f, 1);
  }
}

TEST(Hermite, CoordinatesRoundTrip) {
  IntMatrix a{{2, 4, 6}, {0, 3, 3}, {2, 7, 9}};
  auto h = hermite_row_form(a);
  EXPECT_EQ(h.basis.rows(), 2u);
  std::vector<Integer> v{4, 11, 15};  // 2*row0 + row1
  auto coords = lattice_coordinates(h, v);
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(h.basis.transpose().apply(*coords), v);
  EXPECT_FALSE(lattice_coordinates(h, {1, 0, 0}).has_value());
}

TEST(FieldRank, RejectsComposite) { EXPECT_THROW(Coefficients::prime_field(4), Error); }

TEST(Cohomology, MultiplicationByTwo) {
  CochainComplex c(0, {1, 1}, {IntMatrix{{2}}});
  auto h = cohomology(c);
  EXPECT_TRUE(h.at(0).is_zero());
  EXPECT_EQ(h.at(1).to_string(), "Z/2");
  EXPECT_TRUE(base_change(c, Coefficients::rationals()).acyclic());
  auto f2 = base_change(c, Coefficients::prime_field(2));
  EXPECT_EQ(f2.dimensions.at(0), 1u);
  EXPECT_EQ(f2.dimensions.at(1), 1u);
  EXPECT_TRUE(base_change(c, Coefficients::prime_field(3)).acyclic());
}

TEST(Cohomology, RejectsNonComplex) {
  EXPECT_THROW(CochainComplex(0, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}), Error);
}

TEST(Cohomology, UniversalCoefficientsOnRandomComplexes) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    CochainComplex c = random_complex(rng);
    auto hz = cohomology(c);
    auto hq = base_change(c, Coefficients::rationals());
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      auto hp = base_change(c, Coefficients::prime_field(p));
      for (int n = c.lo(); n <= c.hi(); ++n) {
        EXPECT_EQ(hz.at(n).free_rank, hq.dimensions.at(n));
        // H^n(C ⊗ F_p) = H^n ⊗ F_p + Tor(H^{n+1}, F_p).
        std::size_t expected = hz.at(n).free_rank;
        for (const auto& t : hz.at(n).torsion) expected += (t % p == 0);
        if (n + 1 <= c.hi())
          for (const auto& t : hz.at(n + 1).torsion) expected += (t % p == 0);
        EXPECT_EQ(hp.dimensions.at(n), expected);
      }
    }
  }
}

TEST(Acyclicity, CertificateExamples) {
  CochainComplex id(0, {1, 1}, {IntMatrix{{1}}});
  auto r1 = acyclicity_certificate(id);
  EXPECT_TRUE(r1.acyclic_over_z);
  EXPECT_TRUE(r1.witness_primes.empty());
  EXPECT_TRUE(r1.consistent);

  CochainComplex two(0, {1, 1}, {IntMatrix{{2}}});
  auto r2 = acyclicity_certificate(two);
  EXPECT_FALSE(r2.acyclic_over_z);
  EXPECT_TRUE(r2.acyclic_over_q);
  EXPECT_EQ(r2.witness_primes, (std::vector<Integer>{2}));
  EXPECT_FALSE(r2.acyclic_over_fp.at(2));
  EXPECT_TRUE(r2.consistent);

  CochainComplex three(0, {1, 1}, {IntMatrix{{3}}});
  auto r3 = acyclicity_certificate(direct_sum(two, three));
  EXPECT_EQ(r3.witness_primes, (std::vector<Integer>{2, 3}));
  EXPECT_TRUE(r3.consistent);
}

TEST(QuasiIso, Examples) {
  CochainComplex z(0, {1}, {});
  EXPECT_TRUE(is_quasi_iso(ComplexMap::identity(z)));
  EXPECT_FALSE(is_quasi_iso(ComplexMap(z, z, {IntMatrix{{2}}})));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_quasi_iso(ComplexMap::identity(random_complex(rng))));
}

TEST(ComplexOps, TensorProductSignsAndKunneth) {
  // (Z --2--> Z) ⊗ (Z --2--> Z): H^1 = Z/2, H^2 = Z/2 (Tor term).
  CochainComplex c(0, {1, 1}, {IntMatrix{{2}}});
  auto t = tensor_product(c, c);
  auto h = cohomology(t);
  EXPECT_TRUE(h.at(0).is_zero());
  EXPECT_EQ(h.at(1).to_string(), "Z/2");
  EXPECT_EQ(h.at(2).to_string(), "Z/2");
}

TEST(ComplexIO, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    CochainComplex c = random_complex(rng);
    EXPECT_EQ(complex_from_json(to_json(c)), c);
  }
  IntMatrix big(1, 1);
  big.set(0, 0, Integer("123456789012345678901234567890"));
  EXPECT_EQ(matrix_from_json(to_json(big)), big);
}

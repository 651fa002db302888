#include "binring/binomial/num_poly.hpp"
#include "binring/binomial/witt.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace binring;

namespace {

NumPoly b(unsigned n) { return NumPoly::basis({n}); }

}  // namespace

TEST(NumPoly, ToRationalExpandsBinomials) {
  RatPoly r = to_rational(b(2));
  RatPoly expected(1);
  expected.add_term({2}, Rational(1, 2));
  expected.add_term({1}, Rational(-1, 2));
  EXPECT_EQ(r, expected);
  EXPECT_EQ(to_rational(NumPoly::constant(1, 5)), RatPoly::constant(1, 5));
}

TEST(NumPoly, FromRationalDetectsNonNumerical) {
  RatPoly half(1);
  half.add_term({1}, Rational(1, 2));
  try {
    from_rational(half);
    FAIL() << "expected NotNumerical";
  } catch (const NotNumerical& e) {
    EXPECT_EQ(e.alpha(), (MultiIndex{1}));
    EXPECT_EQ(e.value(), Rational(1, 2));
  }
  RatPoly x2(1);
  x2.add_term({2}, 1);
  NumPoly f = from_rational(x2);
  EXPECT_EQ(f, b(2) * Integer(2) + b(1));
}

TEST(NumPoly, RoundTripsMultivariate) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coef(-9, 9), e(0, 4);
  for (int t = 0; t < 30; ++t) {
    NumPoly f(3);
    for (int k = 0; k < 5; ++k)
      f.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))},
                 coef(rng));
    EXPECT_EQ(from_rational(to_rational(f)), f);
    RatPoly r = to_rational(f);
    EXPECT_EQ(to_rational(from_rational(r)), r);
  }
}

TEST(NumPoly, MultiplyExamples) {
  EXPECT_EQ(b(1) * b(1), b(2) * Integer(2) + b(1));
  EXPECT_EQ(multiply_basis_univariate(1, 2), b(3) * Integer(3) + b(2) * Integer(2));
  EXPECT_EQ(multiply(b(0), b(4)), b(4));
}

TEST(NumPoly, MultiplyAgreesWithEvaluation) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 3), pt(-20, 20);
  for (int t = 0; t < 10; ++t) {
    NumPoly f(2), g(2);
    for (int k = 0; k < 4; ++k) {
      f.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))}, coef(rng));
      g.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))}, coef(rng));
    }
    NumPoly fg = f * g;
    for (int s = 0; s < 100; ++s) {
      std::vector<Integer> p{pt(rng), pt(rng)};
      EXPECT_EQ(evaluate(fg, p), evaluate(f, p) * evaluate(g, p));
      EXPECT_EQ(Rational(evaluate(f, p)), to_rational(f).evaluate(std::span<const Integer>(p)));
    }
  }
}

TEST(NumPoly, EvaluateAtNegativeArguments) {
  std::vector<Integer> p{-1};
  EXPECT_EQ(evaluate(b(3), p), -1);  // binom(-1, 3) = -1
}

TEST(NumPoly, DiagonalIsVandermonde) {
  NumPoly d = diagonal(b(2));
  NumPoly expected(2);
  expected.add_term({2, 0}, 1);
  expected.add_term({1, 1}, 1);
  expected.add_term({0, 2}, 1);
  EXPECT_EQ(d, expected);
  EXPECT_EQ(diagonal(NumPoly::constant(1, 1)), NumPoly::constant(2, 1));
}

TEST(NumPoly, CoalgebraLaws) {
  for (unsigned n = 0; n <= 12; ++n) {
    NumPoly d = diagonal(b(n));
    EXPECT_EQ(diagonal_at(d, 0), diagonal_at(d, 1)) << n;
    EXPECT_EQ(counit_at(d, 0), b(n));
    EXPECT_EQ(counit_at(d, 1), b(n));
    std::vector<std::size_t> swap{1, 0};
    EXPECT_EQ(permute_variables(d, swap), d);
    for (const auto& [alpha, c] : d.terms()) EXPECT_EQ(total_degree(alpha), n);
    // Evaluation: f(x + y) = Delta f (x, y).
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y) {
        std::vector<Integer> xy{x, y}, s{x + y};
        EXPECT_EQ(evaluate(d, xy), evaluate(b(n), s));
      }
  }
}

TEST(NumPoly, FrobeniusQuotient) {
  EXPECT_EQ(frobenius_quotient(b(1), 2), b(2));
  NumPoly x = NumPoly::variable(2, 0) + NumPoly::variable(2, 1) * Integer(3);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    NumPoly q = frobenius_quotient(x, p);
    EXPECT_EQ(q * Integer(p) + x, x.pow(static_cast<unsigned>(p)));
  }
  EXPECT_THROW(frobenius_quotient(b(1), 4), Error);
}

TEST(NumPoly, InternalDegree) {
  EXPECT_EQ(internal_degree(b(5)).value, 5u);
  auto z = internal_degree(NumPoly(1));
  EXPECT_EQ(z.value, 0u);
  EXPECT_TRUE(z.zero_polynomial);
  EXPECT_EQ(internal_degree(b(1) * b(1)).value, 2u);
}

TEST(NumPoly, PrintingAndJson) {
  NumPoly f = b(2) * Integer(3) + b(1);
  EXPECT_EQ(to_string(f), "3*binom(x,2) + binom(x,1)");
  EXPECT_EQ(num_poly_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f).dump(), R"({"terms":[[[1],"1"],[[2],"3"]],"vars":1})");
}

TEST(Witt, GhostExamples) {
  auto s = TruncationSet({1, 2});
  WittVector w(s, BaseRing::integers(), {3, 5});
  auto g = ghost_map(w);
  EXPECT_EQ(g.at(1), 3);
  EXPECT_EQ(g.at(2), 9 + 10);
  WittVector teich(TruncationSet::first(6), BaseRing::integers(), {2, 0, 0, 0, 0, 0});
  for (const auto& [n, v] : ghost_map(teich)) EXPECT_EQ(v, Integer(1) << n);
  EXPECT_THROW(TruncationSet({1, 4}), Error);
}

TEST(Witt, SumPolynomialSecondComponent) {
  auto polys = witt_polynomials(TruncationSet({1, 2}));
  // (u + v)_2 = u_2 + v_2 - u_1 v_1 with variables (u1, u2, v1, v2).
  std::vector<Integer> vars{3, 4, 5, 6};
  EXPECT_EQ(polys->sum[1].evaluate(vars), 4 + 6 - 15);
  EXPECT_EQ(polys->sum[0].evaluate(vars), 8);
}

TEST(Witt, GhostIsRingHomomorphism) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(-6, 6);
  for (const auto& s : {TruncationSet::first(6), TruncationSet::p_typical(2, 4), TruncationSet({1, 2, 3, 6})}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Integer> a(s.size()), bb(s.size());
      for (auto& x : a) x = c(rng);
      for (auto& x : bb) x = c(rng);
      WittVector u(s, BaseRing::integers(), a), v(s, BaseRing::integers(), bb);
      auto gu = ghost_map(u), gv = ghost_map(v), gs = ghost_map(witt_add(u, v)), gp = ghost_map(witt_mul(u, v));
      for (unsigned long n : s.elements()) {
        EXPECT_EQ(gs.at(n), gu.at(n) + gv.at(n));
        EXPECT_EQ(gp.at(n), gu.at(n) * gv.at(n));
      }
      for (unsigned long ell : {2ul, 3ul}) {
        if (s.divided_by(ell).size() == 0) continue;
        auto gf = ghost_map(frobenius(u, ell));
        for (const auto& [n, v2] : gf) EXPECT_EQ(v2, gu.at(n * ell));
      }
    }
  }
}

TEST(Witt, UnitOverZ8) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(0, 7);
  auto s = TruncationSet::first(4);
  auto base = BaseRing::modulo(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<Integer> a(s.size());
    for (auto& x : a) x = c(rng);
    WittVector w(s, base, a);
    EXPECT_EQ(witt_mul(WittVector::one(s, base), w), w);
    EXPECT_EQ(witt_add(WittVector::zero(s, base), w), w);
  }
}

TEST(Witt, FixedPointsAreCyclic) {
  const std::vector<std::pair<unsigned long, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  for (const auto& [p, k] : cases) {
    auto r = frobenius_fixed_points(p, k);
    Integer order;
    mpz_ui_pow_ui(order.get_mpz_t(), p, k);
    EXPECT_EQ(Integer(r.fixed_elements), order);
    EXPECT_EQ(r.order_of_one, order);
    EXPECT_TRUE(r.cyclic());
    EXPECT_EQ(r.additive_structure.torsion, (std::vector<Integer>{order}));
    EXPECT_TRUE(r.closed_under_operations);
  }
}

TEST(Witt, ConcurrentCacheAccess) {
  const auto s = TruncationSet::first(8);
  std::vector<std::shared_ptr<const WittPolynomials>> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) threads.emplace_back([&, i] { got[i] = witt_polynomials(s); });
  for (auto& t : threads) t.join();
  for (const auto& g : got) EXPECT_EQ(g.get(), got.front().get());
}

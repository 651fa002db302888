#include "binring/spaces/cochains.hpp"

#include "binring/binomial/num_poly.hpp"
#include "binring/cosimplicial/normalize.hpp"
#include "binring/error.hpp"

#include <random>
#include <sstream>

namespace binring {

CosimplicialAbGroup cochain_ring(const FiniteSimplicialSet& x, int t) { return dual(x.chains(t)); }

SpaceCohomology space_cohomology(const FiniteSimplicialSet& x, int t) {
  if (t < 1) throw Error("space_cohomology needs truncation >= 1");
  SpaceCohomology out{x.name(), t, {}, {}};
  auto h = cohomology(normalized_complex(cochain_ring(x, t)));
  for (auto& [n, g] : h)
    if (n < t) out.groups[n] = std::move(g);
  if (t <= x.dimension())
    out.warnings.push_back("truncation " + std::to_string(t) + " does not exceed the top dimension " +
                           std::to_string(x.dimension()) + "; degrees >= " + std::to_string(t) + " are not computed");
  return out;
}

Integer binomial(const Integer& a, unsigned long n) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), n);
  return out;
}

namespace {

constexpr unsigned long kPrimes[] = {2, 3, 5, 7};
constexpr unsigned long kMaxBinomial = 5;

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling(const Integer& a, unsigned long n) {
  Integer out = 1;
  for (unsigned long i = 0; i < n; ++i) out *= a - i;
  return out;
}

class Recorder {
 public:
  explicit Recorder(BinomialityReport& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }

 private:
  BinomialityReport& r_;
};

std::vector<Integer> pointwise(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

std::vector<Integer> binomial_of(const std::vector<Integer>& a, unsigned long n) {
  std::vector<Integer> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = binomial(a[k], n);
  return out;
}

}  // namespace

BinomialityReport binomiality_check(const FiniteSimplicialSet& x, int t, std::size_t samples, std::uint64_t seed) {
  if (t < 0) throw Error("binomiality_check: negative truncation");
  BinomialityReport report{"Z^" + x.name(), samples, 0, 0, {}};
  Recorder rec(report);
  const auto ring = cochain_ring(x, t);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(-20, 20);
  auto sample = [&](std::size_t rank) {
    std::vector<Integer> a(rank);
    for (auto& v : a) v = value(rng);
    return a;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const int m = static_cast<int>(s % static_cast<std::size_t>(t + 1));
    const auto a = sample(ring.rank(m));
    const auto b = sample(ring.rank(m));
    const std::string where = "level " + std::to_string(m) + ", sample " + std::to_string(s);
    for (const auto& v : a) {
      for (unsigned long p : kPrimes) {
        Integer ap;
        mpz_pow_ui(ap.get_mpz_t(), v.get_mpz_t(), p);
        rec.check(mpz_divisible_ui_p(Integer(ap - v).get_mpz_t(), p) != 0,
                  where + ": p=" + std::to_string(p) + " does not divide a^p - a at a=" + v.get_str());
      }
      for (unsigned long n = 1; n <= kMaxBinomial; ++n) {
        const Integer f = falling(v, n);
        rec.check(f % factorial(n) == 0 && f / factorial(n) == binomial(v, n),
                  where + ": binom(" + v.get_str() + "," + std::to_string(n) + ") not integral");
      }
    }
    // Structure maps are ring maps commuting with the binomial operations.
    auto check_map = [&](const IntMatrix& f, const std::string& name) {
      rec.check(f.apply(pointwise(a, b)) == pointwise(f.apply(a), f.apply(b)), where + ": " + name + " not multiplicative");
      rec.check(f.apply(std::vector<Integer>(a.size(), 1)) == std::vector<Integer>(f.rows(), 1),
                where + ": " + name + " not unital");
      for (unsigned long n = 2; n <= kMaxBinomial; ++n)
        rec.check(f.apply(binomial_of(a, n)) == binomial_of(f.apply(a), n),
                  where + ": " + name + " does not commute with binom(-," + std::to_string(n) + ")");
    };
    if (m < t)
      for (std::size_t i = 0; i <= static_cast<std::size_t>(m) + 1; ++i)
        check_map(ring.coface(m + 1, i), "d^" + std::to_string(i));
    if (m > 0)
      for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
        check_map(ring.codegeneracy(m - 1, i), "s^" + std::to_string(i));
  }
  return report;
}

BinomialityReport num_binomiality_check(std::size_t samples, std::uint64_t seed, unsigned max_degree) {
  BinomialityReport report{"Num[x]", samples, 0, 0, {}};
  Recorder rec(report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    NumPoly f(1);
    for (unsigned k = 0; k <= max_degree; ++k) f.add_term(MultiIndex{k}, coeff(rng));
    const std::string where = "sample " + std::to_string(s) + " f=" + to_string(f);
    for (unsigned long p : kPrimes) {
      const NumPoly g = f.pow(static_cast<unsigned>(p)) - f;
      bool divisible = true;
      for (const auto& [alpha, c] : g.terms()) divisible = divisible && mpz_divisible_ui_p(c.get_mpz_t(), p);
      rec.check(divisible && frobenius_quotient(f, p) * Integer(p) == g,
                where + ": (f^" + std::to_string(p) + " - f)/" + std::to_string(p) + " not numerical");
    }
    NumPoly prod = NumPoly::constant(1, 1);
    for (unsigned long n = 1; n <= kMaxBinomial; ++n) {
      prod = prod * (f - NumPoly::constant(1, Integer(n - 1)));
      const Integer nf = factorial(n);
      bool divisible = true;
      for (const auto& [alpha, c] : prod.terms()) divisible = divisible && c % nf == 0;
      rec.check(divisible, where + ": binom(f," + std::to_string(n) + ") not numerical");
    }
  }
  return report;
}

}  // namespace binring

#include "binring/linalg/primes.hpp"

#include <algorithm>

namespace binring {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite and > 3.
Integer find_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, g = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(Integer(x - y));
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (g != n) return g;
  }
}

void collect(Integer n, std::vector<Integer>& out) {
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    if (!is_prime(p)) continue;
    if (n % p == 0) {
      out.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.push_back(n);
    return;
  }
  Integer f = find_factor(n);
  collect(f, out);
  collect(Integer(n / f), out);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  collect(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace binring

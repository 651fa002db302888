#include "binring/linalg/field_rank.hpp"

#include "binring/error.hpp"
#include "binring/linalg/primes.hpp"

#include <map>

namespace binring {

Coefficients Coefficients::prime_field(unsigned long p) {
  if (!is_prime(p)) throw Error("Coefficients: " + std::to_string(p) + " is not prime");
  return Coefficients(p);
}

std::string Coefficients::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& a, u64 p) {
  std::vector<std::map<std::size_t, u64>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) {
      u64 x = mpz_fdiv_ui(v.get_mpz_t(), p);
      if (x) rows[r].emplace(c, x);
    }
  std::size_t rank = 0;
  std::vector<bool> used(a.rows(), false);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!used[r] && rows[r].count(c)) {
        pivot = r;
        break;
      }
    if (pivot == a.rows()) continue;
    used[pivot] = true;
    ++rank;
    const u64 inv = powmod(rows[pivot].at(c), p - 2, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      const u64 factor = mulmod(it->second, inv, p);
      for (const auto& [cc, v] : rows[pivot]) {
        u64 sub = mulmod(factor, v, p);
        u64& slot = rows[r][cc];
        slot = (slot + p - sub) % p;
        if (slot == 0) rows[r].erase(cc);
      }
    }
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& a) {
  std::vector<std::map<std::size_t, Rational>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) rows[r].emplace(c, Rational(v));
  std::size_t rank = 0;
  std::vector<bool> used(a.rows(), false);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!used[r] && rows[r].count(c) && (pivot == a.rows() || rows[r].size() < rows[pivot].size()))
        pivot = r;
    if (pivot == a.rows()) continue;
    used[pivot] = true;
    ++rank;
    const Rational lead = rows[pivot].at(c);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      const Rational factor = it->second / lead;
      for (const auto& [cc, v] : rows[pivot]) {
        Rational& slot = rows[r][cc];
        slot -= factor * v;
        if (slot == 0) rows[r].erase(cc);
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t rank_over(const IntMatrix& a, const Coefficients& field) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return field.is_rational() ? rank_rational(a) : rank_mod_p(a, field.characteristic());
}

}  // namespace binring

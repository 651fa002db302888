#include "binring/binomial/rat_poly.hpp"

#include "binring/error.hpp"

#include <sstream>

namespace binring {

std::string to_string(const MultiIndex& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

RatPoly RatPoly::constant(std::size_t num_vars, const Rational& c) {
  RatPoly p(num_vars);
  p.add_term(MultiIndex(num_vars, 0), c);
  return p;
}

RatPoly RatPoly::monomial(MultiIndex exponents, const Rational& c) {
  RatPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

RatPoly RatPoly::variable(std::size_t num_vars, std::size_t j) {
  if (j >= num_vars) throw Error("RatPoly::variable: index out of range");
  MultiIndex a(num_vars, 0);
  a[j] = 1;
  return monomial(std::move(a));
}

Rational RatPoly::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RatPoly::add_term(const MultiIndex& a, const Rational& c) {
  if (a.size() != num_vars_) throw Error("RatPoly: exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned RatPoly::degree_in(std::size_t j) const {
  unsigned d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, a[j]);
  return d;
}

bool RatPoly::has_integer_coefficients() const {
  for (const auto& [a, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational RatPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw Error("RatPoly::evaluate: point has the wrong length");
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[j].get_num_mpz_t(), a[j]);
      mpz_pow_ui(power.get_den_mpz_t(), point[j].get_den_mpz_t(), a[j]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

Rational RatPoly::evaluate(std::span<const Integer> point) const {
  std::vector<Rational> q(point.begin(), point.end());
  return evaluate(std::span<const Rational>(q));
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = constant(num_vars_, 1);
  RatPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void RatPoly::check_vars(const RatPoly& o) const {
  if (num_vars_ != o.num_vars_) throw Error("RatPoly: variable counts differ");
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  check_vars(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  check_vars(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  a.check_vars(b);
  RatPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiIndex e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    os << (first ? "" : " + ") << "(" << c << ")";
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j]) os << "*x" << j << (a[j] > 1 ? "^" + std::to_string(a[j]) : "");
    first = false;
  }
  return os.str();
}

}  // namespace binring

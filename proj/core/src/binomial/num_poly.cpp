#include "binring/binomial/num_poly.hpp"

#include "binring/linalg/primes.hpp"

#include <algorithm>
#include <sstream>

namespace binring {

NumPoly NumPoly::constant(std::size_t num_vars, const Integer& c) {
  NumPoly p(num_vars);
  p.add_term(MultiIndex(num_vars, 0), c);
  return p;
}

NumPoly NumPoly::basis(MultiIndex alpha, const Integer& c) {
  NumPoly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

NumPoly NumPoly::variable(std::size_t num_vars, std::size_t j) {
  if (j >= num_vars) throw Error("NumPoly::variable: index out of range");
  MultiIndex a(num_vars, 0);
  a[j] = 1;
  return basis(std::move(a));
}

Integer NumPoly::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

void NumPoly::add_term(const MultiIndex& a, const Integer& c) {
  if (a.size() != num_vars_) throw Error("NumPoly: index length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NumPoly::check_vars(const NumPoly& o) const {
  if (num_vars_ != o.num_vars_) throw Error("NumPoly: variable counts differ");
}

NumPoly& NumPoly::operator+=(const NumPoly& o) {
  check_vars(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

NumPoly& NumPoly::operator-=(const NumPoly& o) {
  check_vars(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

NumPoly& NumPoly::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

NumPoly multiply_basis_univariate(unsigned m, unsigned n) {
  NumPoly out(1);
  for (unsigned k = 0; k <= std::min(m, n); ++k) {
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), m + n - k, k);
    mpz_bin_uiui(b.get_mpz_t(), m + n - 2 * k, m - k);
    out.add_term({m + n - k}, a * b);
  }
  return out;
}

NumPoly operator*(const NumPoly& a, const NumPoly& b) {
  a.check_vars(b);
  const std::size_t k = a.num_vars_;
  NumPoly out(k);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      // Tensor product of the per-variable expansions.
      std::vector<std::pair<MultiIndex, Integer>> partial{{MultiIndex{}, ca * cb}};
      for (std::size_t j = 0; j < k; ++j) {
        NumPoly factor = multiply_basis_univariate(ea[j], eb[j]);
        std::vector<std::pair<MultiIndex, Integer>> next;
        for (const auto& [idx, c] : partial)
          for (const auto& [e, v] : factor.terms_) {
            MultiIndex grown = idx;
            grown.push_back(e[0]);
            next.emplace_back(std::move(grown), c * v);
          }
        partial = std::move(next);
      }
      for (const auto& [idx, c] : partial) out.add_term(idx, c);
    }
  return out;
}

NumPoly NumPoly::pow(unsigned e) const {
  NumPoly result = constant(num_vars_, 1);
  NumPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

NumPoly multiply(const NumPoly& f, const NumPoly& g) { return f * g; }

NotNumerical::NotNumerical(MultiIndex alpha, Rational value)
    : Error("not numerical: Mahler coefficient at " + binring::to_string(alpha) + " is " + value.get_str()),
      alpha_(std::move(alpha)), value_(std::move(value)) {}

namespace {

// Coefficients of binom(x, n) in the monomial basis, index = power of x.
std::vector<Rational> binomial_monomials(unsigned n) {
  std::vector<Rational> c{Rational(1)};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * i;
    }
    c = std::move(next);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  for (auto& x : c) x /= fact;
  return c;
}

}  // namespace

RatPoly to_rational(const NumPoly& f) {
  const std::size_t k = f.num_vars();
  RatPoly out(k);
  std::map<unsigned, std::vector<Rational>> cache;
  auto expansion = [&](unsigned n) -> const std::vector<Rational>& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, binomial_monomials(n)).first;
    return it->second;
  };
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<std::pair<MultiIndex, Rational>> partial{{MultiIndex{}, Rational(c)}};
    for (std::size_t j = 0; j < k; ++j) {
      const auto& ex = expansion(alpha[j]);
      std::vector<std::pair<MultiIndex, Rational>> next;
      for (const auto& [idx, v] : partial)
        for (unsigned e = 0; e < ex.size(); ++e) {
          if (ex[e] == 0) continue;
          MultiIndex grown = idx;
          grown.push_back(e);
          next.emplace_back(std::move(grown), v * ex[e]);
        }
      partial = std::move(next);
    }
    for (const auto& [idx, v] : partial) out.add_term(idx, v);
  }
  return out;
}

NumPoly from_rational(const RatPoly& f) {
  const std::size_t k = f.num_vars();
  std::vector<unsigned> deg(k);
  std::vector<std::size_t> stride(k, 1);
  std::size_t size = 1;
  for (std::size_t j = 0; j < k; ++j) {
    deg[j] = f.degree_in(j);
    size *= deg[j] + 1;
  }
  for (std::size_t j = k; j-- > 1;) stride[j - 1] = stride[j] * (deg[j] + 1);

  auto unflatten = [&](std::size_t flat) {
    MultiIndex a(k);
    for (std::size_t j = 0; j < k; ++j) {
      a[j] = static_cast<unsigned>(flat / stride[j]);
      flat %= stride[j];
    }
    return a;
  };

  std::vector<Rational> grid(size);
  for (std::size_t flat = 0; flat < size; ++flat) {
    MultiIndex a = unflatten(flat);
    std::vector<Integer> point(a.begin(), a.end());
    grid[flat] = f.evaluate(std::span<const Integer>(point));
  }
  // Forward differences along each axis; afterwards grid[alpha] = (Delta^alpha f)(0).
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t line_len = deg[j] + 1;
    for (std::size_t flat = 0; flat < size; ++flat) {
      if ((flat / stride[j]) % line_len != 0) continue;
      for (unsigned step = 1; step <= deg[j]; ++step)
        for (unsigned i = deg[j]; i >= step; --i)
          grid[flat + i * stride[j]] -= grid[flat + (i - 1) * stride[j]];
    }
  }

  std::map<MultiIndex, Rational, GradedLex> coeffs;
  for (std::size_t flat = 0; flat < size; ++flat)
    if (grid[flat] != 0) coeffs.emplace(unflatten(flat), grid[flat]);
  NumPoly out(k);
  for (const auto& [a, c] : coeffs) {
    if (c.get_den() != 1) throw NotNumerical(a, c);
    out.add_term(a, c.get_num());
  }
  return out;
}

Integer evaluate(const NumPoly& f, std::span<const Integer> point) {
  if (point.size() != f.num_vars()) throw Error("NumPoly evaluate: point has the wrong length");
  Integer sum = 0;
  for (const auto& [alpha, c] : f.terms()) {
    Integer term = c;
    for (std::size_t j = 0; j < alpha.size() && term != 0; ++j) {
      Integer b;
      mpz_bin_ui(b.get_mpz_t(), point[j].get_mpz_t(), alpha[j]);
      term *= b;
    }
    sum += term;
  }
  return sum;
}

NumPoly diagonal(const NumPoly& f) {
  if (f.num_vars() != 1) throw Error("diagonal: expects a polynomial in one variable");
  return diagonal_at(f, 0);
}

NumPoly diagonal_at(const NumPoly& f, std::size_t j) {
  if (j >= f.num_vars()) throw Error("diagonal_at: variable out of range");
  NumPoly out(f.num_vars() + 1);
  for (const auto& [alpha, c] : f.terms()) {
    for (unsigned p = 0; p <= alpha[j]; ++p) {
      MultiIndex beta;
      beta.reserve(alpha.size() + 1);
      beta.insert(beta.end(), alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(j));
      beta.push_back(p);
      beta.push_back(alpha[j] - p);
      beta.insert(beta.end(), alpha.begin() + static_cast<std::ptrdiff_t>(j) + 1, alpha.end());
      out.add_term(beta, c);
    }
  }
  return out;
}

NumPoly counit_at(const NumPoly& f, std::size_t j) {
  if (j >= f.num_vars()) throw Error("counit_at: variable out of range");
  NumPoly out(f.num_vars() - 1);
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha[j] != 0) continue;
    MultiIndex beta = alpha;
    beta.erase(beta.begin() + static_cast<std::ptrdiff_t>(j));
    out.add_term(beta, c);
  }
  return out;
}

NumPoly insert_variable(const NumPoly& f, std::size_t j) {
  if (j > f.num_vars()) throw Error("insert_variable: position out of range");
  NumPoly out(f.num_vars() + 1);
  for (const auto& [alpha, c] : f.terms()) {
    MultiIndex beta = alpha;
    beta.insert(beta.begin() + static_cast<std::ptrdiff_t>(j), 0u);
    out.add_term(beta, c);
  }
  return out;
}

NumPoly permute_variables(const NumPoly& f, std::span<const std::size_t> perm) {
  if (perm.size() != f.num_vars()) throw Error("permute_variables: permutation has the wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw Error("permute_variables: not a permutation");
    seen[p] = true;
  }
  NumPoly out(f.num_vars());
  for (const auto& [alpha, c] : f.terms()) {
    MultiIndex beta(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) beta[perm[i]] = alpha[i];
    out.add_term(beta, c);
  }
  return out;
}

NumPoly frobenius_quotient(const NumPoly& f, unsigned long p) {
  if (!is_prime(p)) throw Error("frobenius_quotient: " + std::to_string(p) + " is not prime");
  NumPoly g = f.pow(static_cast<unsigned>(p)) - f;
  NumPoly out(f.num_vars());
  for (const auto& [alpha, c] : g.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), p))
      throw InternalError("frobenius_quotient: Mahler coefficient " + c.get_str() + " at " + to_string(alpha) +
                          " not divisible by " + std::to_string(p));
    out.add_term(alpha, c / p);
  }
  return out;
}

InternalDegree internal_degree(const NumPoly& f) {
  if (f.is_zero()) return {0, true};
  unsigned d = 0;
  for (const auto& [alpha, c] : f.terms()) d = std::max(d, total_degree(alpha));
  return {d, false};
}

std::string to_string(const NumPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  auto name = [&](std::size_t j) -> std::string {
    if (j < names.size()) return names[j];
    static const char* defaults[] = {"x", "y", "z"};
    return j < 3 ? defaults[j] : "x" + std::to_string(j + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (alpha[j]) factors.push_back("binom(" + name(j) + "," + std::to_string(alpha[j]) + ")");
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

nlohmann::json to_json(const NumPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [alpha, c] : f.terms()) terms.push_back(nlohmann::json::array({alpha, c.get_str()}));
  return {{"vars", f.num_vars()}, {"terms", terms}};
}

NumPoly num_poly_from_json(const nlohmann::json& j) {
  try {
    NumPoly f(j.at("vars").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      Integer c;
      if (c.set_str(t.at(1).get<std::string>(), 10) != 0) throw Error("NumPoly JSON: bad coefficient");
      f.add_term(t.at(0).get<MultiIndex>(), c);
    }
    return f;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("NumPoly JSON: ") + ex.what());
  }
}

}  // namespace binring

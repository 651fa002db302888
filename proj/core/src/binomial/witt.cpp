#include "binring/binomial/witt.hpp"

#include "binring/binomial/rat_poly.hpp"
#include "binring/error.hpp"
#include "binring/linalg/primes.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace binring {

TruncationSet::TruncationSet(std::vector<unsigned long> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (unsigned long n : elements) {
    if (n == 0) throw Error("truncation set: elements must be positive");
    for (unsigned long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      for (unsigned long e : {d, n / d})
        if (!std::binary_search(elements.begin(), elements.end(), e))
          throw Error("truncation set is not divisor-closed: " + std::to_string(e) + " divides " +
                      std::to_string(n));
    }
  }
  elements_ = std::move(elements);
}

TruncationSet TruncationSet::p_typical(unsigned long p, unsigned k) {
  if (!is_prime(p)) throw Error("p_typical: " + std::to_string(p) + " is not prime");
  std::vector<unsigned long> e;
  unsigned long q = 1;
  for (unsigned i = 0; i < k; ++i, q *= p) e.push_back(q);
  return TruncationSet(std::move(e));
}

TruncationSet TruncationSet::first(unsigned long n) {
  std::vector<unsigned long> e(n);
  for (unsigned long i = 0; i < n; ++i) e[i] = i + 1;
  return TruncationSet(std::move(e));
}

bool TruncationSet::contains(unsigned long n) const {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

std::size_t TruncationSet::index_of(unsigned long n) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), n);
  if (it == elements_.end() || *it != n) throw Error(std::to_string(n) + " is not in the truncation set");
  return static_cast<std::size_t>(it - elements_.begin());
}

TruncationSet TruncationSet::divided_by(unsigned long m) const {
  std::vector<unsigned long> e;
  for (unsigned long n : elements_)
    if (n % m == 0) e.push_back(n / m);
  return TruncationSet(std::move(e));
}

BaseRing BaseRing::modulo(const Integer& n) {
  if (n < 2) throw Error("base ring Z/N needs N >= 2");
  return BaseRing(n);
}

BaseRing BaseRing::prime_field(unsigned long p) {
  if (!is_prime(p)) throw Error("prime_field: " + std::to_string(p) + " is not prime");
  return BaseRing(Integer(p));
}

Integer BaseRing::reduce(const Integer& x) const {
  if (modulus_ == 0) return x;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

std::string BaseRing::name() const { return modulus_ == 0 ? "Z" : "Z/" + modulus_.get_str(); }

WittVector::WittVector(TruncationSet s, BaseRing base, std::vector<Integer> components)
    : truncation_(std::move(s)), base_(std::move(base)), components_(std::move(components)) {
  if (components_.size() != truncation_.size())
    throw Error("Witt vector: component count does not match the truncation set");
  for (auto& c : components_) c = base_.reduce(c);
}

WittVector WittVector::zero(const TruncationSet& s, const BaseRing& base) {
  return WittVector(s, base, std::vector<Integer>(s.size(), 0));
}

WittVector WittVector::one(const TruncationSet& s, const BaseRing& base) {
  std::vector<Integer> c(s.size(), 0);
  if (!c.empty()) c[0] = 1;
  return WittVector(s, base, std::move(c));
}

WittVector WittVector::restrict_to(const TruncationSet& sub) const {
  std::vector<Integer> c;
  c.reserve(sub.size());
  for (unsigned long n : sub.elements()) {
    if (!truncation_.contains(n)) throw Error("restrict_to: not a subset of the truncation set");
    c.push_back(component(n));
  }
  return WittVector(sub, base_, std::move(c));
}

std::map<unsigned long, Integer> ghost_map(const WittVector& w) {
  if (!w.base().torsion_free()) throw Error("ghost_map needs a torsion-free base ring");
  std::map<unsigned long, Integer> g;
  for (unsigned long n : w.truncation().elements()) {
    Integer sum = 0;
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d) continue;
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), w.component(d).get_mpz_t(), n / d);
      sum += Integer(d) * power;
    }
    g[n] = sum;
  }
  return g;
}

Integer IntPolynomial::evaluate(const std::vector<Integer>& vars) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms) {
    Integer term = c;
    for (std::size_t j = 0; j < e.size() && term != 0; ++j) {
      if (!e[j]) continue;
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), vars[j].get_mpz_t(), e[j]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

namespace {

// sum_{d | n} d * x_d^{n/d} where x_d is component index_of(d) of `comp`.
RatPoly ghost_polynomial(const TruncationSet& s, const std::vector<RatPoly>& comp, unsigned long n) {
  RatPoly g(comp.front().num_vars());
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) g += comp[s.index_of(d)].pow(static_cast<unsigned>(n / d)) * Rational(d);
  return g;
}

// Solves ghost_n(x) = target(n) for x over Q, one component at a time.
template <class Target>
std::vector<RatPoly> invert_ghost(const TruncationSet& s, std::size_t num_vars, Target target) {
  std::vector<RatPoly> x;
  for (unsigned long n : s.elements()) {
    RatPoly rhs = target(n);
    for (unsigned long d = 1; d < n; ++d)
      if (n % d == 0) rhs -= x[s.index_of(d)].pow(static_cast<unsigned>(n / d)) * Rational(d);
    rhs *= Rational(1, n);
    x.push_back(std::move(rhs));
  }
  (void)num_vars;
  return x;
}

IntPolynomial to_integral(const RatPoly& f, const std::string& what) {
  IntPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1)
      throw InternalError("Witt " + what + " polynomial is not integral: coefficient " + c.get_str() + " at " +
                          to_string(e));
    out.terms.emplace_back(e, c.get_num());
  }
  return out;
}

std::shared_ptr<const WittPolynomials> build_polynomials(const TruncationSet& s) {
  const std::size_t m = s.size();
  auto out = std::make_shared<WittPolynomials>(WittPolynomials{s, {}, {}, {}});
  std::vector<RatPoly> u, v, w;
  for (std::size_t i = 0; i < m; ++i) {
    u.push_back(RatPoly::variable(2 * m, i));
    v.push_back(RatPoly::variable(2 * m, m + i));
    w.push_back(RatPoly::variable(m, i));
  }
  auto sum = invert_ghost(s, 2 * m, [&](unsigned long n) {
    return ghost_polynomial(s, u, n) + ghost_polynomial(s, v, n);
  });
  auto product = invert_ghost(s, 2 * m, [&](unsigned long n) {
    return ghost_polynomial(s, u, n) * ghost_polynomial(s, v, n);
  });
  for (const auto& f : sum) out->sum.push_back(to_integral(f, "sum"));
  for (const auto& f : product) out->product.push_back(to_integral(f, "product"));

  std::set<unsigned long> primes;
  for (unsigned long n : s.elements())
    for (const auto& q : prime_divisors(Integer(n))) primes.insert(q.get_ui());
  for (unsigned long ell : primes) {
    TruncationSet target = s.divided_by(ell);
    if (target.size() == 0) continue;
    auto f = invert_ghost(target, m, [&](unsigned long n) { return ghost_polynomial(s, w, n * ell); });
    auto& slot = out->frobenius[ell];
    for (const auto& g : f) slot.push_back(to_integral(g, "Frobenius"));
  }
  return out;
}

void check_compatible(const WittVector& u, const WittVector& v) {
  if (!(u.truncation() == v.truncation())) throw Error("Witt vectors have different truncation sets");
  if (!(u.base() == v.base())) throw Error("Witt vectors have different base rings");
}

WittVector apply(const std::vector<IntPolynomial>& polys, const WittVector& u, const WittVector& v) {
  std::vector<Integer> vars = u.components();
  vars.insert(vars.end(), v.components().begin(), v.components().end());
  std::vector<Integer> c;
  for (const auto& p : polys) c.push_back(p.evaluate(vars));
  return WittVector(u.truncation(), u.base(), std::move(c));
}

}  // namespace

std::shared_ptr<const WittPolynomials> witt_polynomials(const TruncationSet& s) {
  static std::mutex mutex;
  static std::map<std::vector<unsigned long>, std::shared_ptr<const WittPolynomials>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[s.elements()];
  if (!slot) slot = build_polynomials(s);
  return slot;
}

WittVector witt_add(const WittVector& u, const WittVector& v) {
  check_compatible(u, v);
  return apply(witt_polynomials(u.truncation())->sum, u, v);
}

WittVector witt_mul(const WittVector& u, const WittVector& v) {
  check_compatible(u, v);
  return apply(witt_polynomials(u.truncation())->product, u, v);
}

WittVector frobenius(const WittVector& w, unsigned long m) {
  if (!is_prime(m)) throw Error("frobenius: " + std::to_string(m) + " is not prime");
  TruncationSet target = w.truncation().divided_by(m);
  if (target.size() == 0) return WittVector::zero(target, w.base());
  const auto polys = witt_polynomials(w.truncation());
  const auto& f = polys->frobenius.at(m);
  std::vector<Integer> c;
  for (const auto& p : f) c.push_back(p.evaluate(w.components()));
  return WittVector(std::move(target), w.base(), std::move(c));
}

bool is_frobenius_fixed(const WittVector& w) {
  for (const auto& [ell, polys] : witt_polynomials(w.truncation())->frobenius) {
    (void)polys;
    const WittVector image = frobenius(w, ell);
    if (!(image == w.restrict_to(image.truncation()))) return false;
  }
  return true;
}

FixedPointReport frobenius_fixed_points(unsigned long p, unsigned k) {
  if (k == 0) throw Error("frobenius_fixed_points needs k >= 1");
  const TruncationSet s = TruncationSet::p_typical(p, k);
  const BaseRing base = BaseRing::prime_field(p);
  FixedPointReport report;
  report.p = p;
  report.k = k;

  std::vector<WittVector> all;
  std::vector<Integer> digits(k, 0);
  while (true) {
    all.emplace_back(s, base, digits);
    std::size_t i = 0;
    while (i < k && digits[i] == p - 1) digits[i++] = 0;
    if (i == k) break;
    digits[i] += 1;
  }
  report.total_elements = all.size();

  std::vector<WittVector> fixed;
  for (const auto& w : all)
    if (is_frobenius_fixed(w)) fixed.push_back(w);
  report.fixed_elements = fixed.size();

  auto is_fixed_member = [&](const WittVector& x) {
    return std::find(fixed.begin(), fixed.end(), x) != fixed.end();
  };
  report.closed_under_operations = true;
  for (const auto& a : fixed)
    for (const auto& b : fixed)
      if (!is_fixed_member(witt_add(a, b)) || !is_fixed_member(witt_mul(a, b))) report.closed_under_operations = false;

  // Additive order of each fixed element; the fixed group is a finite p-group,
  // so the counts |G[p^j]| determine its invariant factors.
  const WittVector zero = WittVector::zero(s, base);
  auto order_of = [&](const WittVector& x) {
    Integer n = 1;
    WittVector acc = x;
    while (!(acc == zero)) {
      acc = witt_add(acc, x);
      n += 1;
    }
    return n;
  };
  std::map<unsigned, std::size_t> by_exponent;
  for (const auto& x : fixed) {
    Integer n = order_of(x);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (n != 1) throw InternalError("Witt vector over F_p has additive order prime to p");
    by_exponent[e] += 1;
  }
  report.order_of_one = order_of(WittVector::one(s, base));

  std::vector<Integer> orders;
  std::size_t below = 0;
  unsigned prev_rank = 0;
  std::vector<unsigned> rank_at;  // rank_at[j-1] = #{cyclic factors of order >= p^j}
  const unsigned max_e = by_exponent.empty() ? 0 : by_exponent.rbegin()->first;
  for (unsigned j = 0; j <= max_e; ++j) {
    below += by_exponent.count(j) ? by_exponent[j] : 0;
    // below = |G[p^j]| = p^{sum_i min(e_i, j)}
    unsigned log = 0;
    for (std::size_t t = below; t > 1; t /= p) ++log;
    if (j > 0) rank_at.push_back(log - prev_rank);
    prev_rank = log;
  }
  for (unsigned j = 1; j <= rank_at.size(); ++j) {
    const unsigned with_exactly_j = rank_at[j - 1] - (j < rank_at.size() ? rank_at[j] : 0);
    Integer order;
    mpz_ui_pow_ui(order.get_mpz_t(), p, j);
    for (unsigned t = 0; t < with_exactly_j; ++t) orders.push_back(order);
  }
  report.additive_structure = CohomologyGroup::from_cyclic_orders(orders);
  return report;
}

}  // namespace binring

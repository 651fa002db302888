#include "binring/linalg/cochain_complex.hpp"

#include "binring/error.hpp"

#include <algorithm>
#include <string>

namespace binring {

CochainComplex::CochainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  const std::size_t n = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (diffs_.empty())
    for (std::size_t k = 0; k < n; ++k) diffs_.emplace_back(ranks_[k + 1], ranks_[k]);
  if (diffs_.size() != n) throw Error("CochainComplex: expected " + std::to_string(n) + " differentials");
  for (std::size_t k = 0; k < n; ++k) {
    if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k])
      throw Error("CochainComplex: differential d^" + std::to_string(lo_ + static_cast<int>(k)) +
                  " has shape " + std::to_string(diffs_[k].rows()) + "x" + std::to_string(diffs_[k].cols()));
  }
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw Error("CochainComplex: d^" + std::to_string(lo_ + static_cast<int>(k) + 1) + " d^" +
                  std::to_string(lo_ + static_cast<int>(k)) + " != 0");
}

std::size_t CochainComplex::rank(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

IntMatrix CochainComplex::differential(int n) const {
  if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return IntMatrix(rank(n + 1), rank(n));
}

CochainComplex CochainComplex::truncated(int from, int to) const {
  const int a = std::max(from, lo_), b = std::min(to, hi());
  if (a > b) return CochainComplex(a, {}, {});
  std::vector<std::size_t> r;
  std::vector<IntMatrix> d;
  for (int n = a; n <= b; ++n) {
    r.push_back(rank(n));
    if (n < b) d.push_back(differential(n));
  }
  return CochainComplex(a, std::move(r), std::move(d));
}

CochainComplex extend_range(const CochainComplex& c, int lo, int hi) {
  if (!c.empty() && (lo > c.lo() || hi < c.hi())) throw Error("extend_range: range does not contain the complex");
  std::vector<std::size_t> r;
  std::vector<IntMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    r.push_back(c.rank(n));
    if (n < hi) d.push_back(c.differential(n));
  }
  return CochainComplex(lo, std::move(r), std::move(d));
}

ComplexMap::ComplexMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.lo() != target_.lo() || source_.hi() != target_.hi())
    throw Error("ComplexMap: source and target degree ranges differ");
  const std::size_t n = source_.ranks().size();
  if (components_.size() != n) throw Error("ComplexMap: expected one component per degree");
  for (int d = source_.lo(); d <= source_.hi(); ++d) {
    const auto& f = component(d);
    if (f.rows() != target_.rank(d) || f.cols() != source_.rank(d))
      throw Error("ComplexMap: component in degree " + std::to_string(d) + " has the wrong shape");
  }
  for (int d = source_.lo(); d < source_.hi(); ++d)
    if (component(d + 1) * source_.differential(d) != target_.differential(d) * component(d))
      throw Error("ComplexMap: does not commute with differentials in degree " + std::to_string(d));
}

ComplexMap ComplexMap::identity(const CochainComplex& c) {
  std::vector<IntMatrix> comps;
  for (std::size_t r : c.ranks()) comps.push_back(IntMatrix::identity(r));
  return ComplexMap(c, c, std::move(comps));
}

const IntMatrix& ComplexMap::component(int n) const {
  if (n < source_.lo() || n > source_.hi()) throw Error("ComplexMap: degree out of range");
  return components_[static_cast<std::size_t>(n - source_.lo())];
}

CochainComplex mapping_cone(const ComplexMap& f) {
  const auto& c = f.source();
  const auto& d = f.target();
  if (c.empty()) return d;
  const int lo = c.lo() - 1, hi = c.hi();
  auto comp = [&](int n) { return n >= c.lo() && n <= c.hi() ? f.component(n) : IntMatrix(d.rank(n), c.rank(n)); };
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int n = lo; n <= hi; ++n) ranks.push_back(c.rank(n + 1) + d.rank(n));
  for (int n = lo; n < hi; ++n) {
    // [[-d_C^{n+1}, 0], [f^{n+1}, d_D^n]] : C^{n+1} + D^n -> C^{n+2} + D^{n+1}
    IntMatrix top = IntMatrix::hstack(-c.differential(n + 1), IntMatrix(c.rank(n + 2), d.rank(n)));
    IntMatrix bottom = IntMatrix::hstack(comp(n + 1), d.differential(n));
    diffs.push_back(IntMatrix::vstack(top, bottom));
  }
  return CochainComplex(lo, std::move(ranks), std::move(diffs));
}

CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int n = lo; n <= hi; ++n) ranks.push_back(a.rank(n) + b.rank(n));
  for (int n = lo; n < hi; ++n) diffs.push_back(IntMatrix::direct_sum(a.differential(n), b.differential(n)));
  return CochainComplex(lo, std::move(ranks), std::move(diffs));
}

CochainComplex tensor_product(const CochainComplex& a, const CochainComplex& b) {
  if (a.empty() || b.empty()) return CochainComplex();
  const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  auto block_offset = [&](int n, int p) {
    std::size_t off = 0;
    for (int q = a.lo(); q < p; ++q) off += a.rank(q) * b.rank(n - q);
    return off;
  };
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(block_offset(n, a.hi() + 1));
  std::vector<IntMatrix> diffs;
  for (int n = lo; n < hi; ++n) {
    IntMatrix d(ranks[static_cast<std::size_t>(n + 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int p = a.lo(); p <= a.hi(); ++p) {
      const int q = n - p;
      if (q < b.lo() || q > b.hi()) continue;
      const std::size_t src = block_offset(n, p);
      // da (x) b lands in block (p+1, q).
      if (p + 1 <= a.hi()) {
        IntMatrix k = IntMatrix::kronecker(a.differential(p), IntMatrix::identity(b.rank(q)));
        const std::size_t dst = block_offset(n + 1, p + 1);
        for (std::size_t r = 0; r < k.rows(); ++r)
          for (const auto& [c, v] : k.row(r)) d.add_to(dst + r, src + c, v);
      }
      // (-1)^p a (x) db lands in block (p, q+1).
      if (q + 1 <= b.hi()) {
        IntMatrix k = IntMatrix::kronecker(IntMatrix::identity(a.rank(p)), b.differential(q));
        const Integer sign = (p % 2 == 0) ? 1 : -1;
        const std::size_t dst = block_offset(n + 1, p);
        for (std::size_t r = 0; r < k.rows(); ++r)
          for (const auto& [c, v] : k.row(r)) d.add_to(dst + r, src + c, sign * v);
      }
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(lo, std::move(ranks), std::move(diffs));
}

}  // namespace binring

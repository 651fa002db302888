#include "binring/barcobar/algebra.hpp"

#include "binring/error.hpp"
#include "binring/linalg/complex_io.hpp"

#include <algorithm>

namespace binring {

namespace {

void check_ranks(const std::vector<std::size_t>& ranks) {
  if (ranks.empty()) throw Error("algebra needs at least internal degree 0");
  if (ranks[0] != 0)
    throw Error("algebra: the augmentation ideal has a degree-0 part, so bar bidegrees would have infinite rank");
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::string name, std::vector<std::size_t> ranks,
                             std::map<std::pair<unsigned, unsigned>, IntMatrix> products)
    : name_(std::move(name)), ranks_(std::move(ranks)), products_(std::move(products)) {
  check_ranks(ranks_);
  for (const auto& [pq, m] : products_) {
    const auto [p, q] = pq;
    if (p == 0 || q == 0 || p + q > d_max()) throw Error("algebra: product outside degrees 1..d_max");
    if (m.rows() != rank(p + q) || m.cols() != rank(p) * rank(q))
      throw Error("algebra: product (" + std::to_string(p) + "," + std::to_string(q) + ") has the wrong shape");
  }
}

GradedAlgebra::GradedAlgebra(std::string name, std::vector<std::size_t> ranks,
                             std::map<std::pair<unsigned, unsigned>, IntMatrix> products,
                             std::vector<std::vector<int>> homological, std::vector<IntMatrix> differential)
    : GradedAlgebra(std::move(name), std::move(ranks), std::move(products)) {
  dg_ = true;
  homological_ = std::move(homological);
  differential_ = std::move(differential);
  if (homological_.size() != ranks_.size() || differential_.size() != ranks_.size())
    throw Error("dg algebra: homological degrees and differentials needed for every internal degree");
  for (unsigned d = 0; d <= d_max(); ++d) {
    if (homological_[d].size() != rank(d)) throw Error("dg algebra: wrong number of homological degrees");
    if (differential_[d].rows() != rank(d) || differential_[d].cols() != rank(d))
      throw Error("dg algebra: differential in degree " + std::to_string(d) + " has the wrong shape");
  }
}

IntMatrix GradedAlgebra::product(unsigned p, unsigned q) const {
  auto it = products_.find({p, q});
  if (it != products_.end()) return it->second;
  return IntMatrix(rank(p + q), rank(p) * rank(q));
}

int GradedAlgebra::homological_degree(unsigned d, std::size_t k) const {
  return dg_ ? homological_.at(d).at(k) : 0;
}

IntMatrix GradedAlgebra::differential(unsigned d) const {
  return dg_ ? differential_.at(d) : IntMatrix(rank(d), rank(d));
}

std::optional<std::string> GradedAlgebra::validate() const {
  for (unsigned p = 1; p <= d_max(); ++p)
    for (unsigned q = 1; p + q <= d_max(); ++q)
      for (unsigned r = 1; p + q + r <= d_max(); ++r) {
        IntMatrix left = product(p + q, r) * IntMatrix::kronecker(product(p, q), IntMatrix::identity(rank(r)));
        IntMatrix right = product(p, q + r) * IntMatrix::kronecker(IntMatrix::identity(rank(p)), product(q, r));
        if (!(left == right))
          return "associativity fails on degrees (" + std::to_string(p) + "," + std::to_string(q) + "," +
                 std::to_string(r) + ")";
      }
  if (!dg_) return std::nullopt;
  for (unsigned d = 1; d <= d_max(); ++d) {
    for (std::size_t k = 0; k < rank(d); ++k)
      if (homological_degree(d, k) > -1) return "homological degree above -1 in internal degree " + std::to_string(d);
    const IntMatrix& dd = differential_[d];
    for (std::size_t r = 0; r < dd.rows(); ++r)
      for (const auto& [c, v] : dd.row(r))
        if (homological_degree(d, r) != homological_degree(d, c) - 1)
          return "differential does not lower the homological degree by one in internal degree " + std::to_string(d);
    if (!(dd * dd).is_zero()) return "d^2 != 0 in internal degree " + std::to_string(d);
  }
  for (unsigned p = 1; p <= d_max(); ++p)
    for (unsigned q = 1; p + q <= d_max(); ++q) {
      const IntMatrix mu = product(p, q);
      for (std::size_t r = 0; r < mu.rows(); ++r)
        for (const auto& [c, v] : mu.row(r))
          if (homological_degree(p + q, r) !=
              homological_degree(p, c / rank(q)) + homological_degree(q, c % rank(q)))
            return "product does not add homological degrees";
      IntMatrix sign(rank(p), rank(p));
      for (std::size_t k = 0; k < rank(p); ++k) sign.set(k, k, homological_degree(p, k) % 2 == 0 ? 1 : -1);
      IntMatrix left = differential(p + q) * mu;
      IntMatrix right = mu * (IntMatrix::kronecker(differential(p), IntMatrix::identity(rank(q))) +
                              IntMatrix::kronecker(sign, differential(q)));
      if (!(left == right))
        return "Leibniz rule fails on degrees (" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
  return std::nullopt;
}

CochainComplex GradedAlgebra::weight_complex(unsigned d) const {
  if (rank(d) == 0) return CochainComplex(0, {0}, {});
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t k = 0; k < rank(d); ++k) by_degree[-homological_degree(d, k)].push_back(k);
  const int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::size_t>> members;
  for (int n = lo; n <= hi; ++n) {
    auto it = by_degree.find(n);
    members.push_back(it == by_degree.end() ? std::vector<std::size_t>{} : it->second);
    ranks.push_back(members.back().size());
  }
  const IntMatrix dd = differential(d);
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 0; n + 1 < members.size(); ++n) {
    IntMatrix m(ranks[n + 1], ranks[n]);
    for (std::size_t r = 0; r < members[n + 1].size(); ++r)
      for (std::size_t c = 0; c < members[n].size(); ++c) m.set(r, c, dd.at(members[n + 1][r], members[n][c]));
    diffs.push_back(std::move(m));
  }
  return CochainComplex(lo, std::move(ranks), std::move(diffs));
}

GradedAlgebra GradedAlgebra::truncated(unsigned d) const {
  if (d > d_max()) throw Error("algebra: cannot truncate above its top degree");
  std::vector<std::size_t> ranks(ranks_.begin(), ranks_.begin() + d + 1);
  std::map<std::pair<unsigned, unsigned>, IntMatrix> products;
  for (const auto& [pq, m] : products_)
    if (pq.first + pq.second <= d) products.emplace(pq, m);
  if (!dg_) return GradedAlgebra(name_, std::move(ranks), std::move(products));
  return GradedAlgebra(name_, std::move(ranks), std::move(products),
                       {homological_.begin(), homological_.begin() + d + 1},
                       {differential_.begin(), differential_.begin() + d + 1});
}

GradedAlgebra polynomial_algebra(unsigned d_max) { return truncated_polynomial_algebra(d_max + 1, d_max); }

GradedAlgebra truncated_polynomial_algebra(unsigned k, unsigned d_max) {
  if (k < 2) throw Error("Z[x]/(x^k) needs k >= 2");
  std::vector<std::size_t> ranks(d_max + 1, 0);
  for (unsigned d = 1; d <= d_max && d < k; ++d) ranks[d] = 1;
  std::map<std::pair<unsigned, unsigned>, IntMatrix> products;
  for (unsigned p = 1; p <= d_max; ++p)
    for (unsigned q = 1; p + q <= d_max; ++q)
      if (p + q < k) products.emplace(std::pair{p, q}, IntMatrix{{1}});
  const std::string name = k > d_max ? "Z[x]" : "Z[x]/(x^" + std::to_string(k) + ")";
  return GradedAlgebra(name, std::move(ranks), std::move(products));
}

GradedAlgebra square_zero_algebra(std::vector<std::size_t> ranks) {
  return GradedAlgebra("square-zero", std::move(ranks), {});
}

GradedAlgebra dual_algebra(const GradedCoalgebra& c) {
  std::map<std::pair<unsigned, unsigned>, IntMatrix> products;
  for (unsigned d = 2; d <= c.d_max(); ++d)
    for (unsigned p = 1; p < d; ++p) products.emplace(std::pair{p, d - p}, c.diagonal(d, p).transpose());
  return GradedAlgebra(c.name() + "-dual", c.ranks(), std::move(products));
}

AlgebraMap::AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const unsigned top = source_.d_max();
  if (target_.d_max() != top) throw Error("algebra map: source and target have different top degrees");
  if (components_.size() != top + 1) throw Error("algebra map: one component per internal degree needed");
  for (unsigned d = 0; d <= top; ++d) {
    const IntMatrix& f = components_[d];
    if (f.rows() != target_.rank(d) || f.cols() != source_.rank(d))
      throw Error("algebra map: component " + std::to_string(d) + " has the wrong shape");
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (const auto& [c, v] : f.row(r))
        if (target_.homological_degree(d, r) != source_.homological_degree(d, c))
          throw Error("algebra map: component " + std::to_string(d) + " does not preserve homological degree");
    if (!(f * source_.differential(d) == target_.differential(d) * f))
      throw Error("algebra map: does not commute with the differential in degree " + std::to_string(d));
  }
  for (unsigned p = 1; p <= top; ++p)
    for (unsigned q = 1; p + q <= top; ++q)
      if (!(components_[p + q] * source_.product(p, q) ==
            target_.product(p, q) * IntMatrix::kronecker(components_[p], components_[q])))
        throw Error("algebra map: not multiplicative on degrees (" + std::to_string(p) + "," + std::to_string(q) +
                    ")");
}

std::vector<ComplexMap> weight_maps(const AlgebraMap& f) {
  std::vector<ComplexMap> out;
  for (unsigned d = 0; d <= f.source().d_max(); ++d) {
    const CochainComplex s = f.source().weight_complex(d), t = f.target().weight_complex(d);
    const int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
    std::vector<IntMatrix> comps;
    for (int k = lo; k <= hi; ++k) {
      // Basis elements of degree k in the order weight_complex uses.
      auto members = [&](const GradedAlgebra& a) {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < a.rank(d); ++i)
          if (-a.homological_degree(d, i) == k) m.push_back(i);
        return m;
      };
      const auto ms = members(f.source()), mt = members(f.target());
      IntMatrix c(mt.size(), ms.size());
      for (std::size_t r = 0; r < mt.size(); ++r)
        for (std::size_t col = 0; col < ms.size(); ++col) c.set(r, col, f.component(d).at(mt[r], ms[col]));
      comps.push_back(std::move(c));
    }
    out.emplace_back(extend_range(s, lo, hi), extend_range(t, lo, hi), std::move(comps));
  }
  return out;
}

nlohmann::json to_json(const GradedAlgebra& a) {
  nlohmann::json products = nlohmann::json::array();
  for (unsigned p = 1; p <= a.d_max(); ++p)
    for (unsigned q = 1; p + q <= a.d_max(); ++q) {
      IntMatrix m = a.product(p, q);
      if (!m.is_zero()) products.push_back({{"p", p}, {"q", q}, {"matrix", to_json(m)}});
    }
  nlohmann::json j{{"name", a.name()}, {"ranks", a.ranks()}, {"products", products}};
  if (a.is_dg()) {
    nlohmann::json hom = nlohmann::json::array(), diff = nlohmann::json::array();
    for (unsigned d = 0; d <= a.d_max(); ++d) {
      std::vector<int> h;
      for (std::size_t k = 0; k < a.rank(d); ++k) h.push_back(a.homological_degree(d, k));
      hom.push_back(h);
      diff.push_back(to_json(a.differential(d)));
    }
    j["homological"] = hom;
    j["differential"] = diff;
  }
  return j;
}

GradedAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    std::map<std::pair<unsigned, unsigned>, IntMatrix> products;
    for (const auto& e : j.value("products", nlohmann::json::array()))
      products.emplace(std::pair{e.at("p").get<unsigned>(), e.at("q").get<unsigned>()},
                       matrix_from_json(e.at("matrix")));
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    const std::string name = j.value("name", std::string("file"));
    if (!j.contains("homological")) return GradedAlgebra(name, std::move(ranks), std::move(products));
    std::vector<IntMatrix> diff;
    for (const auto& m : j.at("differential")) diff.push_back(matrix_from_json(m));
    return GradedAlgebra(name, std::move(ranks), std::move(products),
                         j.at("homological").get<std::vector<std::vector<int>>>(), std::move(diff));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("algebra JSON: ") + e.what());
  }
}

}  // namespace binring

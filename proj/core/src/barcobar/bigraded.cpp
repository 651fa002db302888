#include "binring/barcobar/bigraded.hpp"

#include "binring/error.hpp"

#include <future>

namespace binring {

BigradedComplex::BigradedComplex(Grading grading, std::pair<int, int> reported, std::vector<CochainComplex> weights)
    : grading_(grading), reported_(reported), weights_(std::move(weights)) {
  if (weights_.empty()) throw Error("bigraded complex needs internal degree 0");
  if (reported_.first > reported_.second) throw Error("bigraded complex: empty reported range");
}

std::size_t BigradedComplex::rank(int n, unsigned d) const {
  if (d >= weights_.size()) return 0;
  return weights_[d].rank(cochain_degree(n));
}

IntMatrix BigradedComplex::differential(int n, unsigned d) const {
  return weights_.at(d).differential(cochain_degree(n));
}

namespace {

std::map<int, CohomologyGroup> weight_table(const CochainComplex& c) {
  if (c.empty()) return {};
  return cohomology(c);
}

}  // namespace

BidegreeTable bigraded_cohomology(const BigradedComplex& c, bool parallel) {
  std::vector<std::map<int, CohomologyGroup>> per_weight(c.d_max() + 1);
  if (parallel) {
    std::vector<std::future<std::map<int, CohomologyGroup>>> jobs;
    for (unsigned d = 0; d <= c.d_max(); ++d)
      jobs.push_back(std::async(std::launch::async, weight_table, std::cref(c.weight(d))));
    for (unsigned d = 0; d <= c.d_max(); ++d) per_weight[d] = jobs[d].get();
  } else {
    for (unsigned d = 0; d <= c.d_max(); ++d) per_weight[d] = weight_table(c.weight(d));
  }
  BidegreeTable out;
  for (unsigned d = 0; d <= c.d_max(); ++d)
    for (int n = c.n_min(); n <= c.n_max(); ++n) {
      const int k = c.grading() == Grading::cohomological ? n : -n;
      auto it = per_weight[d].find(k);
      out[{n, d}] = it == per_weight[d].end() ? CohomologyGroup{} : it->second;
    }
  return out;
}

std::vector<Bidegree> nonzero_bidegrees(const BidegreeTable& t) {
  std::vector<Bidegree> out;
  for (const auto& [b, g] : t)
    if (!g.is_zero()) out.push_back(b);
  return out;
}

}  // namespace binring

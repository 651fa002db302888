#pragma once

#include "binring/linalg/cochain_complex.hpp"
#include "binring/linalg/cohomology.hpp"

#include <map>
#include <utility>
#include <vector>

namespace binring {

enum class Grading {
  /// Differential raises n (cobar).
  cohomological,
  /// Differential lowers n (bar); degree n is stored in cochain degree -n.
  homological,
};

/// Complexes indexed by (n, d) with the differential preserving the internal
/// degree d. One CochainComplex per internal degree 0..d_max.
class BigradedComplex {
 public:
  BigradedComplex() = default;
  /// `reported` is the range of n whose cohomology is final; the stored
  /// complexes may extend one step beyond it.
  BigradedComplex(Grading grading, std::pair<int, int> reported, std::vector<CochainComplex> weights);

  Grading grading() const { return grading_; }
  unsigned d_max() const { return static_cast<unsigned>(weights_.size()) - 1; }
  int n_min() const { return reported_.first; }
  int n_max() const { return reported_.second; }
  const CochainComplex& weight(unsigned d) const { return weights_.at(d); }
  const std::vector<CochainComplex>& weights() const { return weights_; }

  std::size_t rank(int n, unsigned d) const;
  /// The differential leaving bidegree (n, d).
  IntMatrix differential(int n, unsigned d) const;

 private:
  int cochain_degree(int n) const { return grading_ == Grading::cohomological ? n : -n; }

  Grading grading_ = Grading::cohomological;
  std::pair<int, int> reported_{0, 0};
  std::vector<CochainComplex> weights_;
};

using Bidegree = std::pair<int, unsigned>;
using BidegreeTable = std::map<Bidegree, CohomologyGroup>;

/// Cohomology (homology for the homological grading) in every reported
/// bidegree. Internal degrees are independent and run concurrently.
BidegreeTable bigraded_cohomology(const BigradedComplex& c, bool parallel = true);

/// Bidegrees whose group is nonzero, in order.
std::vector<Bidegree> nonzero_bidegrees(const BidegreeTable& t);

}  // namespace binring

#include "binring/barcobar/conservativity.hpp"

#include "binring/barcobar/cobar.hpp"
#include "binring/error.hpp"
#include "binring/linalg/cohomology.hpp"

namespace binring {

ConservativityReport conservativity_demo(const AlgebraMap& f, int n_max, unsigned d_max, const std::string& example) {
  ConservativityReport report;
  report.example = example;
  report.n_max = n_max;
  report.d_max = d_max;

  const auto on_weights = weight_maps(f);
  report.f_qiso = true;
  for (unsigned d = 1; d <= d_max; ++d) report.f_qiso = report.f_qiso && is_quasi_iso(on_weights.at(d));

  const auto bar = bar_map(f, n_max, d_max);
  for (unsigned d = 0; d <= d_max; ++d) {
    const ComplexMap& m = bar[d];
    // Graded windows keep one extra length, so cohomology of the cone is
    // final from cochain degree -n_max upwards.
    const int from = f.source().is_dg() ? m.source().lo() : -n_max;
    if (!cone_acyclic_in_degrees(m, from, m.source().hi())) report.bar_failures.push_back(d);
  }
  report.bar_qiso = report.bar_failures.empty();
  return report;
}

std::vector<std::string> conservativity_examples() { return {"identity", "double", "quotient", "dg-unit"}; }

AlgebraMap conservativity_example(const std::string& name, unsigned d_max) {
  if (name == "identity") {
    const GradedAlgebra a = polynomial_algebra(d_max);
    std::vector<IntMatrix> comps;
    for (unsigned d = 0; d <= d_max; ++d) comps.push_back(IntMatrix::identity(a.rank(d)));
    return AlgebraMap(a, a, std::move(comps));
  }
  if (name == "double") {
    // x -> 2x, so x^d -> 2^d x^d.
    const GradedAlgebra a = polynomial_algebra(d_max);
    std::vector<IntMatrix> comps{IntMatrix(0, 0)};
    for (unsigned d = 1; d <= d_max; ++d) {
      IntMatrix m(1, 1);
      m.set(0, 0, Integer(1) << d);
      comps.push_back(m);
    }
    return AlgebraMap(a, a, std::move(comps));
  }
  if (name == "quotient") {
    const GradedAlgebra a = polynomial_algebra(d_max);
    const GradedAlgebra b = truncated_polynomial_algebra(2, d_max);
    std::vector<IntMatrix> comps;
    for (unsigned d = 0; d <= d_max; ++d) {
      IntMatrix m(b.rank(d), a.rank(d));
      if (d == 1) m.set(0, 0, 1);
      comps.push_back(m);
    }
    return AlgebraMap(a, b, std::move(comps));
  }
  if (name == "dg-unit") {
    // Target: Abar_1 = Z y + Z x with |y| = -1, |x| = -2, d y = x, zero
    // products. Source: the ground ring.
    std::vector<std::size_t> ranks(d_max + 1, 0), empty(d_max + 1, 0);
    if (d_max >= 1) ranks[1] = 2;
    std::vector<std::vector<int>> hom(d_max + 1), hom0(d_max + 1);
    std::vector<IntMatrix> diff, diff0;
    for (unsigned d = 0; d <= d_max; ++d) {
      IntMatrix m(ranks[d], ranks[d]);
      if (d == 1) {
        hom[d] = {-1, -2};
        m.set(1, 0, 1);
      }
      diff.push_back(m);
      diff0.emplace_back(0, 0);
    }
    GradedAlgebra source("Z", empty, {}, hom0, diff0);
    GradedAlgebra target("acyclic", ranks, {}, hom, diff);
    std::vector<IntMatrix> comps;
    for (unsigned d = 0; d <= d_max; ++d) comps.emplace_back(ranks[d], 0);
    return AlgebraMap(source, target, std::move(comps));
  }
  throw Error("unknown conservativity example '" + name + "'");
}

}  // namespace binring

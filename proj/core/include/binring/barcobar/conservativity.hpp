#pragma once

#include "binring/barcobar/algebra.hpp"

#include <string>
#include <vector>

namespace binring {

struct ConservativityReport {
  std::string example;
  int n_max = 0;
  unsigned d_max = 0;
  /// f restricted to each internal degree 1..d_max is a quasi-isomorphism.
  bool f_qiso = false;
  /// B(f) has acyclic cone in every reported degree of every internal degree.
  bool bar_qiso = false;
  /// Internal degrees where the cone of B(f) has cohomology in the window.
  std::vector<unsigned> bar_failures;
  /// bar_qiso holds but f_qiso does not.
  bool counterexample() const { return bar_qiso && !f_qiso; }
};

ConservativityReport conservativity_demo(const AlgebraMap& f, int n_max, unsigned d_max,
                                         const std::string& example = "custom");

/// Names accepted by conservativity_example.
std::vector<std::string> conservativity_examples();

/// "identity" on Z[x], "double" x -> 2x, "quotient" Z[x] -> Z[x]/(x^2), and
/// "dg-unit": Z -> an algebra whose augmentation ideal is acyclic.
AlgebraMap conservativity_example(const std::string& name, unsigned d_max);

}  // namespace binring

#pragma once

#include "binring/cosimplicial/cosimplicial.hpp"

#include <vector>

namespace binring {

/// Constant cosimplicial Z: every structure map is the identity of Z.
CosimplicialAbGroup constant_z(int t);

/// Simplicial model of K(Z, 1): Z^n in degree n, outer faces drop the first or
/// last coordinate, inner face d_i adds coordinates i and i+1, and s_i inserts
/// a zero coordinate at position i. Requires t >= 1.
SimplicialAbGroup z1_simplicial(int t);

/// Nondecreasing surjections [m] ->> [n] as value sequences, in lexicographic
/// order.
std::vector<std::vector<unsigned>> surjections(unsigned m, unsigned n);

/// Gamma applied to Z[n] (simplicial, basis the surjections [m] ->> [n]).
SimplicialAbGroup gamma_sphere_simplicial(unsigned n, int t);

/// Z[-n] = dual of gamma_sphere_simplicial; N of it is Z in degree n.
/// Requires n >= 1 and t >= n.
CosimplicialAbGroup gamma_sphere(unsigned n, int t);

}  // namespace binring

#include "binring/cosimplicial/normalize.hpp"

#include "binring/error.hpp"
#include "binring/linalg/hermite.hpp"
#include "binring/linalg/smith.hpp"

#include <optional>

namespace binring {

namespace {

// Kernel of the stacked codegeneracies out of one degree, either as a set of
// surviving coordinates or as a Hermite basis.
struct Subspace {
  std::optional<std::vector<std::size_t>> coordinates;
  HermiteForm hermite;
  IntMatrix basis;  // columns
};

// When every column of `s` is zero or is the only nonzero entry of some row,
// the kernel is spanned by the unit vectors of the zero columns. This covers
// all models built from maps of bases (simplicial sets, cobar objects).
std::optional<std::vector<std::size_t>> coordinate_kernel(const IntMatrix& s) {
  std::vector<bool> nonzero(s.cols(), false), forced(s.cols(), false);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    const auto& row = s.row(r);
    for (const auto& [c, v] : row) nonzero[c] = true;
    if (row.size() == 1) forced[row.begin()->first] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    if (nonzero[c] && !forced[c]) return std::nullopt;
    if (!nonzero[c]) keep.push_back(c);
  }
  return keep;
}

Subspace normalized_subspace(const CosimplicialAbGroup& a, int n) {
  const std::size_t dim = a.rank(n);
  IntMatrix stacked(0, dim);
  for (std::size_t i = 0; n >= 1 && i <= static_cast<std::size_t>(n) - 1; ++i)
    stacked = IntMatrix::vstack(stacked, a.codegeneracy(n - 1, i));
  Subspace out;
  if (auto coords = coordinate_kernel(stacked)) {
    out.basis = IntMatrix(dim, coords->size());
    for (std::size_t k = 0; k < coords->size(); ++k) out.basis.set((*coords)[k], k, 1);
    out.coordinates = std::move(coords);
    return out;
  }
  out.hermite = hermite_row_form(integer_kernel(stacked).transpose());
  out.basis = out.hermite.basis.transpose();
  return out;
}

IntMatrix coordinates_in(const Subspace& target, const IntMatrix& vectors) {
  if (target.coordinates) {
    IntMatrix restricted = vectors.select_rows(*target.coordinates);
    // Every image must lie in the subspace, so nothing is lost by restricting.
    if (!(target.basis * restricted == vectors))
      throw InternalError("normalization: differential leaves the normalized subcomplex");
    return restricted;
  }
  const IntMatrix columns = vectors.transpose();
  IntMatrix out(target.hermite.basis.rows(), vectors.cols());
  const auto dense = columns.to_dense();
  for (std::size_t c = 0; c < dense.size(); ++c) {
    auto coords = lattice_coordinates(target.hermite, dense[c]);
    if (!coords) throw InternalError("normalization: differential leaves the normalized subcomplex");
    for (std::size_t r = 0; r < coords->size(); ++r) out.set(r, c, (*coords)[r]);
  }
  return out;
}

IntMatrix alternating_coface_sum(const CosimplicialAbGroup& a, int n) {
  IntMatrix d(a.rank(n + 1), a.rank(n));
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n) + 1; ++i) {
    if (i % 2 == 0)
      d += a.coface(n + 1, i);
    else
      d -= a.coface(n + 1, i);
  }
  return d;
}

}  // namespace

CochainComplex unnormalized_complex(const CosimplicialAbGroup& a) {
  std::vector<IntMatrix> d;
  for (int n = 0; n < a.truncation(); ++n) d.push_back(alternating_coface_sum(a, n));
  return CochainComplex(0, a.ranks(), std::move(d));
}

ComplexMap Normalization::inclusion() const { return ComplexMap(complex, unnormalized, basis); }

Normalization normalize(const CosimplicialAbGroup& a) {
  const int t = a.truncation();
  std::vector<Subspace> sub;
  for (int n = 0; n <= t; ++n) sub.push_back(normalized_subspace(a, n));

  Normalization out;
  out.unnormalized = unnormalized_complex(a);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int n = 0; n <= t; ++n) {
    ranks.push_back(sub[static_cast<std::size_t>(n)].basis.cols());
    out.basis.push_back(sub[static_cast<std::size_t>(n)].basis);
  }
  for (int n = 0; n < t; ++n) {
    const IntMatrix image = out.unnormalized.differential(n) * sub[static_cast<std::size_t>(n)].basis;
    d.push_back(coordinates_in(sub[static_cast<std::size_t>(n) + 1], image));
  }
  out.complex = CochainComplex(0, std::move(ranks), std::move(d));
  return out;
}

CochainComplex normalized_complex(const CosimplicialAbGroup& a) { return normalize(a).complex; }

}  // namespace binring

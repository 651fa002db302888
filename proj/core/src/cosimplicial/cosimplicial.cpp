#include "binring/cosimplicial/cosimplicial.hpp"

#include "binring/error.hpp"

namespace binring {

namespace {

void check_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                std::to_string(rows) + "x" + std::to_string(cols));
}

std::string label(const char* kind, std::size_t m, std::size_t i) {
  return std::string(kind) + "(" + std::to_string(m) + "," + std::to_string(i) + ")";
}

}  // namespace

std::string IdentityViolation::to_string() const {
  return identity + " fails at degree " + std::to_string(degree) + " for (i, j) = (" + std::to_string(i) + ", " +
         std::to_string(j) + ")";
}

CosimplicialAbGroup::CosimplicialAbGroup(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> cofaces,
                                         std::vector<std::vector<IntMatrix>> codegeneracies)
    : ranks_(std::move(ranks)), cofaces_(std::move(cofaces)), codegeneracies_(std::move(codegeneracies)) {
  if (ranks_.empty()) throw Error("cosimplicial object needs at least degree 0");
  const std::size_t t = ranks_.size() - 1;
  if (cofaces_.size() != t || codegeneracies_.size() != t)
    throw Error("cosimplicial object: expected " + std::to_string(t) + " levels of cofaces and codegeneracies");
  for (std::size_t m = 1; m <= t; ++m) {
    if (cofaces_[m - 1].size() != m + 1) throw Error("cosimplicial object: wrong number of cofaces into degree " +
                                                     std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i) check_shape(cofaces_[m - 1][i], ranks_[m], ranks_[m - 1], label("coface", m, i));
  }
  for (std::size_t m = 0; m < t; ++m) {
    if (codegeneracies_[m].size() != m + 1)
      throw Error("cosimplicial object: wrong number of codegeneracies into degree " + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i)
      check_shape(codegeneracies_[m][i], ranks_[m], ranks_[m + 1], label("codegeneracy", m, i));
  }
}

const IntMatrix& CosimplicialAbGroup::coface(int m, std::size_t i) const {
  return cofaces_.at(static_cast<std::size_t>(m) - 1).at(i);
}

const IntMatrix& CosimplicialAbGroup::codegeneracy(int m, std::size_t i) const {
  return codegeneracies_.at(static_cast<std::size_t>(m)).at(i);
}

void CosimplicialAbGroup::set_coface(int m, std::size_t i, IntMatrix value) {
  IntMatrix& slot = cofaces_.at(static_cast<std::size_t>(m) - 1).at(i);
  check_shape(value, slot.rows(), slot.cols(), label("coface", static_cast<std::size_t>(m), i));
  slot = std::move(value);
}

std::optional<IdentityViolation> CosimplicialAbGroup::validate() const {
  const int t = truncation();
  // d^j d^i = d^i d^{j-1} for i < j, on A^{m-1} -> A^{m+1}.
  for (int m = 1; m + 1 <= t; ++m)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(m) + 1; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!(coface(m + 1, j) * coface(m, i) == coface(m + 1, i) * coface(m, j - 1)))
          return IdentityViolation{"d^j d^i = d^i d^(j-1)", m - 1, i, j};
  // s^j s^i = s^i s^{j+1} for i <= j, on A^{m+2} -> A^m.
  for (int m = 0; m + 2 <= t; ++m)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j)
      for (std::size_t i = 0; i <= j; ++i)
        if (!(codegeneracy(m, j) * codegeneracy(m + 1, i) == codegeneracy(m, i) * codegeneracy(m + 1, j + 1)))
          return IdentityViolation{"s^j s^i = s^i s^(j+1)", m + 2, i, j};
  // s^j d^i on A^m -> A^{m+1} -> A^m.
  for (int m = 0; m + 1 <= t; ++m) {
    const std::size_t top = static_cast<std::size_t>(m);
    for (std::size_t j = 0; j <= top; ++j)
      for (std::size_t i = 0; i <= top + 1; ++i) {
        const IntMatrix lhs = codegeneracy(m, j) * coface(m + 1, i);
        if (i == j || i == j + 1) {
          if (!(lhs == IntMatrix::identity(rank(m)))) return IdentityViolation{"s^j d^i = id", m, i, j};
        } else if (i < j) {
          if (!(lhs == coface(m, i) * codegeneracy(m - 1, j - 1)))
            return IdentityViolation{"s^j d^i = d^i s^(j-1)", m, i, j};
        } else if (!(lhs == coface(m, i - 1) * codegeneracy(m - 1, j))) {
          return IdentityViolation{"s^j d^i = d^(i-1) s^j", m, i, j};
        }
      }
  }
  return std::nullopt;
}

CosimplicialAbGroup CosimplicialAbGroup::truncated(int t) const {
  if (t < 0 || t > truncation()) throw Error("truncated: degree out of range");
  const auto n = static_cast<std::size_t>(t);
  return CosimplicialAbGroup({ranks_.begin(), ranks_.begin() + static_cast<std::ptrdiff_t>(n) + 1},
                             {cofaces_.begin(), cofaces_.begin() + static_cast<std::ptrdiff_t>(n)},
                             {codegeneracies_.begin(), codegeneracies_.begin() + static_cast<std::ptrdiff_t>(n)});
}

SimplicialAbGroup::SimplicialAbGroup(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> faces,
                                     std::vector<std::vector<IntMatrix>> degeneracies)
    : ranks_(std::move(ranks)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (ranks_.empty()) throw Error("simplicial object needs at least degree 0");
  const std::size_t t = ranks_.size() - 1;
  if (faces_.size() != t || degeneracies_.size() != t)
    throw Error("simplicial object: expected " + std::to_string(t) + " levels of faces and degeneracies");
  for (std::size_t m = 1; m <= t; ++m) {
    if (faces_[m - 1].size() != m + 1)
      throw Error("simplicial object: wrong number of faces out of degree " + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i) check_shape(faces_[m - 1][i], ranks_[m - 1], ranks_[m], label("face", m, i));
  }
  for (std::size_t m = 0; m < t; ++m) {
    if (degeneracies_[m].size() != m + 1)
      throw Error("simplicial object: wrong number of degeneracies out of degree " + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i)
      check_shape(degeneracies_[m][i], ranks_[m + 1], ranks_[m], label("degeneracy", m, i));
  }
}

const IntMatrix& SimplicialAbGroup::face(int m, std::size_t i) const {
  return faces_.at(static_cast<std::size_t>(m) - 1).at(i);
}

const IntMatrix& SimplicialAbGroup::degeneracy(int m, std::size_t i) const {
  return degeneracies_.at(static_cast<std::size_t>(m)).at(i);
}

std::optional<IdentityViolation> SimplicialAbGroup::validate() const {
  const int t = truncation();
  // d_i d_j = d_{j-1} d_i for i < j, on A_m -> A_{m-2}.
  for (int m = 2; m <= t; ++m)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(m); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!(face(m - 1, i) * face(m, j) == face(m - 1, j - 1) * face(m, i)))
          return IdentityViolation{"d_i d_j = d_(j-1) d_i", m, i, j};
  // s_i s_j = s_{j+1} s_i for i <= j, on A_m -> A_{m+2}.
  for (int m = 0; m + 2 <= t; ++m)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j)
      for (std::size_t i = 0; i <= j; ++i)
        if (!(degeneracy(m + 1, i) * degeneracy(m, j) == degeneracy(m + 1, j + 1) * degeneracy(m, i)))
          return IdentityViolation{"s_i s_j = s_(j+1) s_i", m, i, j};
  // d_i s_j on A_m -> A_{m+1} -> A_m.
  for (int m = 0; m + 1 <= t; ++m) {
    const std::size_t top = static_cast<std::size_t>(m);
    for (std::size_t j = 0; j <= top; ++j)
      for (std::size_t i = 0; i <= top + 1; ++i) {
        const IntMatrix lhs = face(m + 1, i) * degeneracy(m, j);
        if (i == j || i == j + 1) {
          if (!(lhs == IntMatrix::identity(rank(m)))) return IdentityViolation{"d_i s_j = id", m, i, j};
        } else if (i < j) {
          if (!(lhs == degeneracy(m - 1, j - 1) * face(m, i)))
            return IdentityViolation{"d_i s_j = s_(j-1) d_i", m, i, j};
        } else if (!(lhs == degeneracy(m - 1, j) * face(m, i - 1))) {
          return IdentityViolation{"d_i s_j = s_j d_(i-1)", m, i, j};
        }
      }
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<IntMatrix>> transposed(const std::vector<std::vector<IntMatrix>>& levels) {
  std::vector<std::vector<IntMatrix>> out;
  out.reserve(levels.size());
  for (const auto& level : levels) {
    auto& row = out.emplace_back();
    for (const auto& m : level) row.push_back(m.transpose());
  }
  return out;
}

}  // namespace

CosimplicialAbGroup dual(const SimplicialAbGroup& a) {
  return CosimplicialAbGroup(a.ranks(), transposed(a.faces()), transposed(a.degeneracies()));
}

SimplicialAbGroup dual(const CosimplicialAbGroup& a) {
  return SimplicialAbGroup(a.ranks(), transposed(a.cofaces()), transposed(a.codegeneracies()));
}

}  // namespace binring

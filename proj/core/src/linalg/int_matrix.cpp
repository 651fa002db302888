#include "binring/linalg/int_matrix.hpp"

#include "binring/error.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace binring {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> dense) {
  rows_ = dense.size();
  cols_ = rows_ == 0 ? 0 : dense.begin()->size();
  data_.resize(rows_);
  std::size_t r = 0;
  for (const auto& row : dense) {
    if (row.size() != cols_) throw Error("IntMatrix: ragged initializer");
    std::size_t c = 0;
    for (long v : row) {
      if (v != 0) data_[r].emplace(c, Integer(v));
      ++c;
    }
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Integer(1));
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> values) {
  IntMatrix m(rows, cols);
  if (values.size() > std::min(rows, cols)) throw Error("IntMatrix::diagonal: too many values");
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  IntMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != m.cols_) throw Error("IntMatrix::from_dense: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (dense[r][c] != 0) m.data_[r].emplace(c, dense[r][c]);
  }
  return m;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

void IntMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw Error("IntMatrix: index (" + std::to_string(r) + "," + std::to_string(c) +
                ") out of bounds for " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Integer(0) : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
  check_index(r, c);
  if (value == 0)
    data_[r].erase(c);
  else
    data_[r][c] = value;
}

void IntMatrix::add_to(std::size_t r, std::size_t c, const Integer& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) data_[r].erase(it);
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0 || dst == src) {
    if (dst == src && factor != 0) {
      Integer scale = factor + 1;
      for (auto it = data_[dst].begin(); it != data_[dst].end();) {
        it->second *= scale;
        it = it->second == 0 ? data_[dst].erase(it) : std::next(it);
      }
    }
    return;
  }
  Row& d = data_[dst];
  for (const auto& [c, v] : data_[src]) {
    auto [it, inserted] = d.try_emplace(c, factor * v);
    if (!inserted) {
      it->second += factor * v;
      if (it->second == 0) d.erase(it);
    }
  }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) { std::swap(data_[a], data_[b]); }

void IntMatrix::negate_row(std::size_t r) {
  for (auto& [c, v] : data_[r]) v = -v;
}

void IntMatrix::combine_rows(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                             const Integer& c, const Integer& d) {
  Row ri, rj;
  auto accumulate = [](Row& out, const Row& in, const Integer& s) {
    if (s == 0) return;
    for (const auto& [col, v] : in) {
      auto [it, inserted] = out.try_emplace(col, s * v);
      if (!inserted) it->second += s * v;
    }
  };
  accumulate(ri, data_[i], a);
  accumulate(ri, data_[j], b);
  accumulate(rj, data_[i], c);
  accumulate(rj, data_[j], d);
  std::erase_if(ri, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(rj, [](const auto& kv) { return kv.second == 0; });
  data_[i] = std::move(ri);
  data_[j] = std::move(rj);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_hint(t.data_[c].end(), r, v);
  return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error("IntMatrix::select_rows: index out of bounds");
    m.data_[i] = data_[rows[i]];
  }
  return m;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw Error("IntMatrix::apply: dimension mismatch");
  std::vector<Integer> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw Error("IntMatrix::vstack: column mismatch");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.rows_));
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw Error("IntMatrix::hstack: row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    m.data_[r] = a.data_[r];
    for (const auto& [c, v] : b.data_[r]) m.data_[r].emplace_hint(m.data_[r].end(), c + a.cols_, v);
  }
  return m;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) m.data_[r] = a.data_[r];
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (const auto& [c, v] : b.data_[r]) m.data_[a.rows_ + r].emplace_hint(m.data_[a.rows_ + r].end(), c + a.cols_, v);
  return m;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ra = 0; ra < a.rows_; ++ra)
    for (const auto& [ca, va] : a.data_[ra])
      for (std::size_t rb = 0; rb < b.rows_; ++rb)
        for (const auto& [cb, vb] : b.data_[rb]) m.data_[ra * b.rows_ + rb].emplace(ca * b.cols_ + cb, va * vb);
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("IntMatrix: shape mismatch in +");
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) add_to(r, c, v);
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("IntMatrix: shape mismatch in -");
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) add_to(r, c, -v);
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_)
    for (auto& [c, v] : row) v *= scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error("IntMatrix: cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    IntMatrix::Row& out = m.data_[r];
    for (const auto& [k, v] : a.data_[r])
      for (const auto& [c, w] : b.data_[k]) {
        auto [it, inserted] = out.try_emplace(c, v * w);
        if (!inserted) it->second += v * w;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

}  // namespace binring

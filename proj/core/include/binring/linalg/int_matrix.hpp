#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace binring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Compares |a| with |b|.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// Sparse integer matrix stored as one ordered map per row. Zero entries are
/// never stored.
class IntMatrix {
 public:
  using Row = std::map<std::size_t, Integer>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> dense);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            std::span<const Integer> values);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Integer at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& value);
  void add_to(std::size_t r, std::size_t c, const Integer& value);
  const Row& row(std::size_t r) const { return data_[r]; }

  // Row operations, used by the normal-form algorithms.
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  /// Replaces rows (i, j) by (a*row_i + b*row_j, c*row_i + d*row_j).
  void combine_rows(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                    const Integer& c, const Integer& d);

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;
  std::vector<std::vector<Integer>> to_dense() const;
  std::vector<Integer> apply(std::span<const Integer> v) const;

  /// Stacks a above b.
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  /// Places a left of b.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
  /// Kronecker product; row index is ia * b.rows() + ib.
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator-(IntMatrix a) { return a *= Integer(-1); }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace binring

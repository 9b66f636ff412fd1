#pragma once

// Exact dense linear algebra over Q and Z: reduced row echelon form, particular
// solutions, Smith normal form with unimodular transforms, Hermite normal form.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrcd/ncpoly.hpp"

namespace arrcd {

using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const std::vector<T>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// First count rows.
  Matrix top_rows(std::size_t count) const {
    Matrix out(count, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), out.data_.begin());
    return out;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  /// row i += factor * row j
  void add_row_multiple(std::size_t i, std::size_t j, const T& factor) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += factor * (*this)(j, k);
  }

  /// col i += factor * col j
  void add_col_multiple(std::size_t i, std::size_t j, const T& factor) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += factor * (*this)(k, j);
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        if (lhs(i, k) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

struct Echelon {
  /// Reduced row echelon form; rows past rank() are zero.
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(RationalMatrix m);

/// Some x with a x = b (free variables zero), or nothing when inconsistent.
std::optional<std::vector<Rational>> particular_solution(const RationalMatrix& a, const std::vector<Rational>& b);

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x);
std::vector<Rational> multiply(const IntegerMatrix& a, const std::vector<Rational>& x);

/// left * input * right = diagonal, left and right unimodular, diagonal entries
/// d_1 | d_2 | ... | d_rank positive and zero afterwards.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix right_inverse;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& input);

/// Row-style Hermite normal form of the row lattice; zero rows dropped.
IntegerMatrix hermite_normal_form(IntegerMatrix m);

/// Scales each row by the least common multiple of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Hermite basis of (row space over Q) intersected with Z^n.
IntegerMatrix saturated_row_basis(const IntegerMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& q);

/// "p/q" or "p"; throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace arrcd

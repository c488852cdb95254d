#pragma once

// Exact integer and rational linear algebra: Smith normal form,
// determinants, and inertia of symmetric forms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace steincalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation receives a structurally invalid argument
/// (dimension mismatch, non-symmetric input to a symmetric-only routine, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator-() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// left * M * right == diag(diagonal) padded with zeros to M's shape.
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};

/// Smith normal form with unimodular transforms. The pivot is the entry of
/// smallest nonzero absolute value in the active block, ties broken by the
/// lowest (row, col).
SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Leading principal minors D_1, ..., D_n of a square matrix.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Inertia of a symmetric matrix by exact rational congruence
/// diagonalization. A zero diagonal with a nonzero off-diagonal entry is
/// split off as a hyperbolic pair (one positive, one negative).
Inertia inertia(const IntMatrix& m);

int signature(const IntMatrix& m);

/// Sylvester's criterion on exact leading minors: (-1)^k D_k > 0 for all k.
bool is_negative_definite(const IntMatrix& m);

}  // namespace steincalc

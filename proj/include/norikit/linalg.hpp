#pragma once

// Exact dense linear algebra over Q and Z.
//
// Every matrix carries a ring tag. Entries are GMP rationals in both cases;
// a Z-matrix is one whose entries all have denominator 1. Arithmetic between
// matrices of different rings is rejected rather than silently promoted.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace norikit {

enum class Ring { Q, Z };

const char* to_string(Ring ring);

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

bool is_integral(const Scalar& x);

/// Parses `[+-]digits` or `[+-]digits/digits`. Throws Error(Parse) on
/// anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols,
         std::vector<Scalar> entries);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_columns(Ring ring, std::size_t rows,
                             const std::vector<Vector>& columns);
  static Matrix column_vector(Ring ring, const Vector& v);

  Ring ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;

  /// Z -> Q always succeeds; Q -> Z requires integral entries.
  Matrix with_ring(Ring ring) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_ = Ring::Q;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(Ring ring, const std::vector<Matrix>& blocks);

/// vec() stacks the columns; unvec() inverts it.
Vector vec(const Matrix& m);
Matrix unvec(Ring ring, const Vector& v, std::size_t rows, std::size_t cols);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Basis of {v : M v = 0} over Q, returned RREF-reduced (as rows).
std::vector<Vector> nullspace_q(const Matrix& m);

struct SmithForm {
  Matrix U;
  Matrix S;
  Matrix V;
};

/// S = U M V with U, V unimodular and S diagonal, d_1 | d_2 | ..., d_i >= 0.
SmithForm snf(const Matrix& m);

/// Lattice basis of the integer kernel, Hermite-reduced.
std::vector<Vector> kernel_z(const Matrix& m);

/// Row-style Hermite normal form; zero rows are dropped.
Matrix hermite_rows(const Matrix& m);

/// nullspace_q or kernel_z depending on the ring of m.
std::vector<Vector> kernel(const Matrix& m);

/// Canonical basis (as columns) of the module spanned by the columns of
/// `generators`: RREF over Q, HNF over Z. Two generator sets span the same
/// module iff their canonical bases are equal.
Matrix span_basis(const Matrix& generators);

/// Solves sum_i c_i g_i = target in the ring. Vectors must share length.
std::optional<Vector> solve_in_span(Ring ring, const std::vector<Vector>& generators,
                                    const Vector& target);

/// Reusable solver for a fixed generator set (the columns of `generators`).
class SpanSolver {
 public:
  explicit SpanSolver(const Matrix& generators);

  std::optional<Vector> solve(const Vector& target) const;
  bool contains(const Vector& target) const { return solve(target).has_value(); }
  std::size_t length() const noexcept { return length_; }
  std::size_t count() const noexcept { return count_; }

 private:
  Ring ring_;
  std::size_t length_;
  std::size_t count_;
  std::size_t rank_ = 0;
  // Q: left transform and pivots of the RREF. Z: the Smith form.
  Matrix transform_;
  std::vector<std::size_t> pivots_;
  SmithForm smith_;
};

/// Whitespace-separated rows, one per line. Blank lines are skipped.
Matrix parse_matrix_text(std::string_view text, Ring ring);
std::string format_matrix(const Matrix& m);

}  // namespace norikit

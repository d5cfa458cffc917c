#pragma once

// Dense matrices over an exact field, with deterministic Gauss-Jordan
// elimination (pivot = first nonzero entry scanning columns left to right),
// kernel bases, linear solves and quotient helpers. Everything downstream
// (hom spaces, presentations, Ext groups) reduces to these.

#include <optional>
#include <vector>

#include "taucat/scalar.hpp"

namespace taucat {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), f_{} {}
  Matrix(Field f, int rows, int cols)
      : rows_(rows), cols_(cols), f_(f), e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, int n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(Field f, const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return f_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  Vec apply(const Vec& v) const;    // matrix * column vector
  Vec row(int r) const;
  Vec col(int c) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  struct Echelon;
  Echelon echelon() const;

  int rank() const;
  int nullity() const { return cols_ - rank(); }

  // Columns of the result span ker(A); canonical basis: one vector per free
  // column, unit coordinate there, pivot coordinates filled from rref.
  std::vector<Vec> kernel_basis() const;

  // One solution of A x = b, if any.
  std::optional<Vec> solve(const Vec& b) const;
  // X with A X = B, columnwise.
  std::optional<Matrix> solve_matrix(const Matrix& B) const;
  std::optional<Matrix> inverse() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Field f_{};
  std::vector<Scalar> e_;
};

struct Matrix::Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

inline int Matrix::rank() const { return echelon().rank; }

// Row-space reducer: reduce vectors modulo span(rows), extract canonical
// coordinates on the complement. Used for cokernels / quotient modules.
struct QuotientSpace {
  int ambient = 0;
  Matrix pi;     // q x n projection onto quotient coordinates
  Matrix sigma;  // n x q section, pi * sigma = id
  int dim() const { return pi.rows(); }
};
QuotientSpace quotient_space(Field f, int ambient, const std::vector<Vec>& spanning);

// dim(k^ambient / span(vectors))
int quotient_dim(Field f, int ambient, const std::vector<Vec>& vectors);

// Canonical basis of span(vectors) in k^ambient (rref rows, zero rows dropped).
std::vector<Vec> span_basis(Field f, int ambient, const std::vector<Vec>& vectors);

// Rank of a set of vectors.
int span_rank(Field f, int ambient, const std::vector<Vec>& vectors);

}  // namespace taucat

#include "taucat/matrix.hpp"

#include <stdexcept>

namespace taucat {

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, int cols) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::logic_error("matrix: ragged row");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_cols(Field f, const std::vector<Vec>& cols, int rows) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::logic_error("matrix: ragged column");
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix: shape mismatch in product");
  Matrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix: shape mismatch in sum");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix: shape mismatch in diff");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(f_, rows_);
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::logic_error("matrix: apply shape mismatch");
  Vec r(rows_, Scalar::zero(f_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::row(int r) const {
  Vec v(cols_, Scalar::zero(f_));
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_, Scalar::zero(f_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::logic_error("matrix: hstack shape mismatch");
  Matrix r(a.f_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::logic_error("matrix: vstack shape mismatch");
  Matrix r(a.f_, a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix r(a.f_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return r;
}

Matrix::Echelon Matrix::echelon() const {
  Echelon e{*this, {}, 0};
  Matrix& m = e.rref;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int piv = -1;
    for (int r = lead; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Scalar inv = m.at(lead, c).inverse();
    for (int j = c; j < cols_; ++j) m.at(lead, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      Scalar k = m.at(r, c);
      for (int j = c; j < cols_; ++j) m.at(r, j) -= k * m.at(lead, j);
    }
    e.pivot_cols.push_back(c);
    ++lead;
  }
  e.rank = static_cast<int>(e.pivot_cols.size());
  return e;
}

std::vector<Vec> Matrix::kernel_basis() const {
  Echelon e = echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols_, Scalar::zero(f_));
    v[fc] = Scalar::one(f_);
    for (int r = 0; r < e.rank; ++r) v[e.pivot_cols[r]] = -e.rref.at(r, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  auto X = solve_matrix(from_cols(f_, {b}, rows_));
  if (!X) return std::nullopt;
  return X->col(0);
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& B) const {
  if (B.rows() != rows_) throw std::logic_error("matrix: solve shape mismatch");
  Echelon e = hstack(*this, B).echelon();
  for (int c : e.pivot_cols)
    if (c >= cols_) return std::nullopt;
  Matrix X(f_, cols_, B.cols());
  for (int r = 0; r < e.rank; ++r)
    for (int j = 0; j < B.cols(); ++j)
      X.at(e.pivot_cols[r], j) = e.rref.at(r, cols_ + j);
  return X;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto X = solve_matrix(identity(f_, rows_));
  if (!X) return std::nullopt;
  if (!((*this) * *X).is_identity()) return std::nullopt;
  return X;
}

QuotientSpace quotient_space(Field f, int ambient, const std::vector<Vec>& spanning) {
  Matrix rows = Matrix::from_rows(f, spanning, ambient);
  Matrix::Echelon e = rows.echelon();
  std::vector<bool> is_pivot(ambient, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  int q = static_cast<int>(free_cols.size());

  QuotientSpace qs;
  qs.ambient = ambient;
  qs.pi = Matrix(f, q, ambient);
  qs.sigma = Matrix(f, ambient, q);
  // pi(e_c) for pivot column c: subtract the rref row with that pivot, keep
  // free coordinates; for free column c: unit coordinate.
  for (int j = 0; j < q; ++j) {
    qs.pi.at(j, free_cols[j]) = Scalar::one(f);
    qs.sigma.at(free_cols[j], j) = Scalar::one(f);
  }
  for (int r = 0; r < e.rank; ++r) {
    int pc = e.pivot_cols[r];
    for (int j = 0; j < q; ++j) qs.pi.at(j, pc) = -e.rref.at(r, free_cols[j]);
  }
  return qs;
}

int quotient_dim(Field f, int ambient, const std::vector<Vec>& vectors) {
  return ambient - span_rank(f, ambient, vectors);
}

std::vector<Vec> span_basis(Field f, int ambient, const std::vector<Vec>& vectors) {
  Matrix::Echelon e = Matrix::from_rows(f, vectors, ambient).echelon();
  std::vector<Vec> basis;
  for (int r = 0; r < e.rank; ++r) basis.push_back(e.rref.row(r));
  return basis;
}

int span_rank(Field f, int ambient, const std::vector<Vec>& vectors) {
  return Matrix::from_rows(f, vectors, ambient).rank();
}

}  // namespace taucat

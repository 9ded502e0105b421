#pragma once

// Dense exact linear algebra over Q. Sizes in this project are small
// (coefficient spaces of low-degree polynomial models, Gram matrices,
// basis-change solves), so plain fraction-pivot Gaussian elimination is
// adequate and keeps every result exact.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace branchlab {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static QMatrix identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged input");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  QVec row(size_t i) const {
    QVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix*: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Rat& x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  QVec apply(const QVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    QVec r(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Rat inv = Rat(1) / (*this)(r, c);
      for (size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Rat f = (*this)(i, c);
        if (f == 0) continue;
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    QMatrix c = *this;
    return c.rref().size();
  }

  Rat det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    QMatrix m = *this;
    Rat d = 1;
    for (size_t c = 0; c < cols_; ++c) {
      size_t p = c;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) return Rat(0);
      if (p != c) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      Rat inv = Rat(1) / m(c, c);
      for (size_t i = c + 1; i < rows_; ++i) {
        Rat f = m(i, c) * inv;
        if (f == 0) continue;
        for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  QMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    QMatrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    auto piv = aug.rref();
    // The identity block keeps the augmented rank full, so singularity shows
    // up as a pivot escaping past the left block.
    if (piv.size() != rows_ || (rows_ > 0 && piv.back() >= cols_))
      throw std::domain_error("inverse: singular matrix");
    QMatrix inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  // Solves A x = b; returns nullopt when inconsistent. Free variables are 0.
  std::optional<QVec> solve(const QVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    QVec x(cols_, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, cols_);
    return x;
  }

  // Basis of the right nullspace, one vector per non-pivot column.
  std::vector<QVec> nullspace() const {
    QMatrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (size_t c = 0; c < cols_; ++c) {
      if (is_piv[c]) continue;
      QVec v(cols_, Rat(0));
      v[c] = 1;
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, c);
      basis.push_back(v);
    }
    return basis;
  }

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Row space membership test: is v in the span of the rows of basis?
inline bool in_row_span(const QMatrix& basis, const QVec& v) {
  std::vector<QVec> rows;
  for (size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  QMatrix a = QMatrix::from_rows(rows);
  size_t r0 = a.rank();
  rows.push_back(v);
  QMatrix b = QMatrix::from_rows(rows);
  return b.rank() == r0;
}

}  // namespace branchlab

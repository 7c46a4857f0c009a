#include "phca/qmatrix.hpp"

#include <stdexcept>

namespace phca {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < (int)a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < (int)a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix m(rows_, cols_);
  for (int i = 0; i < (int)a_.size(); ++i) m.a_[i] = a_[i] * c;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::det: not square");
  QMatrix m = *this;
  Rational d(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = m.at(c, c).inverse();
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

int QMatrix::rank() const {
  QMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int p = -1;
    for (int r = rank; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(rank, j));
    Rational inv = m.at(rank, c).inverse();
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rational QMatrix::leading_principal_minor(int k) const {
  if (k < 1 || k > rows_ || k > cols_) throw std::out_of_range("leading_principal_minor");
  QMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  return m.det();
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::inverse: not square");
  QMatrix m = *this;
  QMatrix inv = identity(rows_);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) return std::nullopt;
    if (p != c)
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rational piv = m.at(c, c).inverse();
    for (int j = 0; j < cols_; ++j) {
      m.at(c, j) *= piv;
      inv.at(c, j) *= piv;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c);
      for (int j = 0; j < cols_; ++j) {
        m.at(r, j) -= f * m.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  if ((int)b.size() != rows_) throw std::invalid_argument("QMatrix::solve: bad rhs size");
  QMatrix m(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    m.at(i, cols_) = b[i];
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int p = -1;
    for (int r = rank; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j <= cols_; ++j) std::swap(m.at(p, j), m.at(rank, j));
    Rational piv = m.at(rank, c).inverse();
    for (int j = 0; j <= cols_; ++j) m.at(rank, j) *= piv;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c);
      for (int j = 0; j <= cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows_; ++r)
    if (!m.at(r, cols_).is_zero()) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m.at(r, cols_);
  return x;
}

bool QMatrix::in_column_span(const std::vector<Rational>& v) const {
  return solve(v).has_value();
}

std::string QMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) {
      s += at(i, j).to_string();
      if (j + 1 < cols_) s += ", ";
    }
    s += (i + 1 < rows_) ? ";\n" : "]";
  }
  return s;
}

}  // namespace phca

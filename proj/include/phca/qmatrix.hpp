#ifndef PHCA_QMATRIX_HPP
#define PHCA_QMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "phca/rational.hpp"

namespace phca {

/// Dense rational matrix with exact elimination. Desk-scale sizes only.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix operator*(const Rational& c) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  QMatrix transposed() const;
  bool is_symmetric() const;
  bool is_zero() const;

  Rational det() const;
  int rank() const;
  /// Determinant of the top-left k x k block.
  Rational leading_principal_minor(int k) const;
  std::optional<QMatrix> inverse() const;

  /// Solves A x = b; nullopt when inconsistent. For underdetermined systems
  /// free variables are set to zero.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  /// Column span membership: does [cols | v] have the same rank as [cols]?
  bool in_column_span(const std::vector<Rational>& v) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace phca

#endif

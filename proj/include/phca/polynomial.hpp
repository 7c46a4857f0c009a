#ifndef PHCA_POLYNOMIAL_HPP
#define PHCA_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phca/rational.hpp"

namespace phca {

/// Patches are desk scale; exponent vectors are stored inline.
inline constexpr int kMaxVars = 8;

/// Exponent multi-index, zero-padded past nvars. Lexicographic order on the
/// full array is the canonical term order.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted with no zero coefficients stored. nvars may be 0,
/// in which case the polynomial is a plain scalar (used by constant-section
/// models over a point).
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, Rational c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, const Monomial& m, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent). Only meaningful together with
  /// is_constant() when the caller needs the whole value.
  Rational constant_value() const;
  int degree() const;  // total degree; -1 for the zero polynomial
  Rational coefficient(const Monomial& m) const;

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exact formal partial derivative. Throws std::out_of_range for a bad index.
  Polynomial partial(int var) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;  // x1..xn placeholder names

  /// Appends a term, combining and dropping zeros; input need not be sorted.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void normalize();

  int nvars_;
  std::vector<std::pair<Monomial, Rational>> terms_;  // sorted by Monomial
};

/// Exact multivariate division: returns p/d when d divides p exactly,
/// std::nullopt otherwise. Throws std::domain_error when d is zero.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

}  // namespace phca

#endif

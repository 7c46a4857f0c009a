#ifndef PHCA_PARACOMPLEX_HPP
#define PHCA_PARACOMPLEX_HPP

#include <string>
#include <utility>

#include "phca/rational.hpp"

namespace phca {

/// Para-complex scalar a + jb with j*j = +1 (not the imaginary unit).
/// The idempotents (1+j)/2 and (1-j)/2 square to themselves and annihilate
/// each other; the lightcone map a+jb -> (a+b, a-b) is a ring isomorphism
/// onto pairs with componentwise operations.
struct ParaComplex {
  Rational re, im;

  ParaComplex() = default;
  ParaComplex(Rational a, Rational b) : re(std::move(a)), im(std::move(b)) {}
  explicit ParaComplex(Rational a) : re(std::move(a)) {}

  static ParaComplex j() { return {Rational(0), Rational(1)}; }
  static ParaComplex idempotent_plus() { return {Rational(1, 2), Rational(1, 2)}; }
  static ParaComplex idempotent_minus() { return {Rational(1, 2), Rational(-1, 2)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ParaComplex conj() const { return {re, -im}; }

  /// (a+b, a-b): coordinates in the idempotent basis.
  std::pair<Rational, Rational> lightcone() const { return {re + im, re - im}; }
  static ParaComplex from_lightcone(const Rational& p, const Rational& m) {
    return {(p + m) * Rational(1, 2), (p - m) * Rational(1, 2)};
  }

  friend ParaComplex operator+(const ParaComplex& a, const ParaComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ParaComplex operator-(const ParaComplex& a, const ParaComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  ParaComplex operator-() const { return {-re, -im}; }
  friend ParaComplex operator*(const ParaComplex& a, const ParaComplex& b) {
    return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ParaComplex& a, const ParaComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ParaComplex& a, const ParaComplex& b) { return !(a == b); }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return "j*" + im.to_string();
    return re.to_string() + " + j*" + im.to_string();
  }
};

}  // namespace phca

#endif

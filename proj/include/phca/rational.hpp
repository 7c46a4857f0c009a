#ifndef PHCA_RATIONAL_HPP
#define PHCA_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace phca {

/// Exact rational number. Values are kept in a reduced int64 numerator /
/// denominator pair and promoted to GMP only when an operation overflows;
/// results that fit are demoted back. Denominators are always positive and
/// never zero.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input
  /// or zero denominator.
  static Rational from_string(std::string_view s);

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  /// -1, 0 or +1.
  int sign() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  /// "p" or "p/q", canonical reduced form.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct RawTag {};
  Rational(std::int64_t n, std::int64_t d, RawTag) : num_(n), den_(d) {}
  explicit Rational(mpq_class q);

  bool small() const { return big_ == nullptr; }
  mpq_class to_mpq() const;
  void assign_mpq(mpq_class q);  // canonicalized input; demotes when it fits
  static Rational reduce128(__int128 n, __int128 d);

  void add_slow(const Rational& o);
  void sub_slow(const Rational& o);
  void mul_slow(const Rational& o);
  void div_slow(const Rational& o);

  std::int64_t num_, den_;  // reduced, den_ > 0; meaningful when big_ == nullptr
  std::unique_ptr<mpq_class> big_;
};

inline Rational& Rational::operator+=(const Rational& o) {
  if (small() && o.small()) {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    *this = reduce128(n, d);
    return *this;
  }
  add_slow(o);
  return *this;
}

inline Rational& Rational::operator-=(const Rational& o) {
  if (small() && o.small()) {
    __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    *this = reduce128(n, d);
    return *this;
  }
  sub_slow(o);
  return *this;
}

inline Rational& Rational::operator*=(const Rational& o) {
  if (small() && o.small()) {
    __int128 n = (__int128)num_ * o.num_;
    __int128 d = (__int128)den_ * o.den_;
    *this = reduce128(n, d);
    return *this;
  }
  mul_slow(o);
  return *this;
}

inline bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small())
    return a.num_ == b.num_ && a.den_ == b.den_;
  return mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t()) == 0;
}

inline bool operator<(const Rational& a, const Rational& b) {
  if (a.small() && b.small())
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  return mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t()) < 0;
}

}  // namespace phca

#endif

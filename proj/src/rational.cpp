#include "phca/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace phca {

namespace {

using uint128 = unsigned __int128;

uint128 abs128(__int128 x) { return x < 0 ? (uint128)(-(x + 1)) + 1 : (uint128)x; }

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  uint128 u = abs128(v);
  mpz_class hi((unsigned long)(u >> 64));
  mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  *this = reduce128((__int128)n, (__int128)d);
}

Rational::Rational(const Rational& o)
    : num_(o.num_), den_(o.den_),
      big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& o) {
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rational::Rational(mpq_class q) : num_(0), den_(1) { assign_mpq(std::move(q)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), (long)num_, 1UL);
  mpq_class d;
  mpq_set_si(d.get_mpq_t(), (long)den_, 1UL);
  return q / d;
}

void Rational::assign_mpq(mpq_class q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

Rational Rational::reduce128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  uint128 g = gcd128(abs128(n), (uint128)d);
  uint128 un = abs128(n) / g;
  uint128 ud = (uint128)d / g;
  if (un <= (uint128)kMax && ud <= (uint128)kMax)
    return Rational(n < 0 ? -(std::int64_t)un : (std::int64_t)un, (std::int64_t)ud, RawTag{});
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  q.canonicalize();
  Rational r;
  r.assign_mpq(std::move(q));
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
}

Rational Rational::operator-() const {
  if (small()) return Rational(-num_, den_, RawTag{});
  Rational r;
  r.assign_mpq(mpq_class(-*big_));
  return r;
}

void Rational::add_slow(const Rational& o) { assign_mpq(to_mpq() + o.to_mpq()); }
void Rational::sub_slow(const Rational& o) { assign_mpq(to_mpq() - o.to_mpq()); }
void Rational::mul_slow(const Rational& o) { assign_mpq(to_mpq() * o.to_mpq()); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (small() && o.small()) {
    __int128 n = (__int128)num_ * o.den_;
    __int128 d = (__int128)den_ * o.num_;
    *this = reduce128(n, d);
    return *this;
  }
  div_slow(o);
  return *this;
}

void Rational::div_slow(const Rational& o) { assign_mpq(to_mpq() / o.to_mpq()); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (small()) return Rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_, RawTag{});
  Rational r;
  r.assign_mpq(mpq_class(1 / *big_));
  return r;
}

Rational Rational::from_string(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  auto parse_int = [&](std::string_view t) -> mpz_class {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') bad();
    return mpz_class(std::string(t), 10);
  };
  mpz_class num = parse_int(slash == std::string_view::npos ? s : s.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.assign_mpq(std::move(q));
  return r;
}

std::string Rational::to_string() const {
  if (big_) {
    std::string s = big_->get_num().get_str();
    if (big_->get_den() != 1) s += "/" + big_->get_den().get_str();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace phca

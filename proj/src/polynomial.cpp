#include "phca/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace phca {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("Polynomial: nvars out of range (desk scale is <= " +
                                std::to_string(kMaxVars) + ")");
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, std::move(c));
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  if (i < 0 || i >= nvars) throw std::out_of_range("Polynomial::variable: index");
  Monomial m;
  m.e[i] = 1;
  p.terms_.emplace_back(m, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, Rational c) {
  Polynomial p(nvars);
  for (int i = nvars; i < kMaxVars; ++i)
    if (m.e[i] != 0) throw std::out_of_range("Polynomial::monomial: exponent past nvars");
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rational Polynomial::constant_value() const {
  for (const auto& [m, c] : terms_)
    if (m == Monomial{}) return c;
  return Rational(0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Monomial m = terms_[i].first;
    Rational c = std::move(terms_[i].second);
    ++i;
    while (i < terms_.size() && terms_[i].first == m) {
      c += terms_[i].second;
      ++i;
    }
    if (!c.is_zero()) terms_[out++] = {m, std::move(c)};
  }
  terms_.resize(out);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  terms_.emplace_back(m, c);
  normalize();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      out.push_back(std::move(terms_[i++]));
    } else if (o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = std::move(terms_[i].second);
      c += o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  Polynomial p(a.nvars_);
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int k = 0; k < kMaxVars; ++k) {
        unsigned s = (unsigned)ma.e[k] + mb.e[k];
        if (s > 255) throw std::overflow_error("Polynomial: exponent overflow");
        m.e[k] = (std::uint8_t)s;
      }
      p.terms_.emplace_back(m, ca * cb);
    }
  p.normalize();
  return p;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  if (c.is_zero()) return Polynomial(a.nvars_);
  Polynomial p(a.nvars_);
  p.terms_.reserve(a.terms_.size());
  for (const auto& [m, ca] : a.terms_) p.terms_.emplace_back(m, ca * c);
  return p;
}

Polynomial Polynomial::partial(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("Polynomial::partial: index");
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    p.terms_.emplace_back(d, c * Rational((long long)m.e[var]));
  }
  // order is preserved except for merges that cannot happen (distinct inputs
  // stay distinct after decrementing one fixed exponent)
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < (int)names.size()) ? names[i] : ("x" + std::to_string(i + 1));
      if (m.e[i] > 1) mono += "^" + std::to_string((int)m.e[i]);
    }
    Rational cc = c;
    std::string piece;
    if (mono.empty()) {
      piece = cc.abs().to_string();
    } else if (cc.abs().is_one()) {
      piece = mono;
    } else {
      piece = cc.abs().to_string() + "*" + mono;
    }
    if (first) {
      s = (cc.sign() < 0 ? "-" : "") + piece;
      first = false;
    } else {
      s += (cc.sign() < 0 ? " - " : " + ") + piece;
    }
  }
  return s;
}

std::string Polynomial::to_string() const { return to_string({}); }

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
  if (p.is_zero()) return Polynomial(p.nvars());
  if (d.is_constant()) return p * d.constant_value().inverse();
  const auto& dl = d.terms().back();  // lex-leading term
  Polynomial rem = p;
  Polynomial quot(p.nvars());
  while (!rem.is_zero()) {
    const auto& rl = rem.terms().back();
    Monomial q;
    for (int k = 0; k < kMaxVars; ++k) {
      if (rl.first.e[k] < dl.first.e[k]) return std::nullopt;
      q.e[k] = rl.first.e[k] - dl.first.e[k];
    }
    Polynomial t = Polynomial::monomial(p.nvars(), q, rl.second / dl.second);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

}  // namespace phca

#ifndef PHCA_ALT_TENSOR_HPP
#define PHCA_ALT_TENSOR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phca/patch.hpp"
#include "phca/polynomial.hpp"

namespace phca {

inline constexpr int kMaxTensorDegree = 8;

/// Strictly increasing index tuple; antisymmetry is canonical-by-storage.
struct IndexTuple {
  std::array<std::uint8_t, kMaxTensorDegree> idx{};
  std::uint8_t len = 0;

  static IndexTuple of(std::initializer_list<int> is) {
    IndexTuple t;
    for (int i : is) t.idx[t.len++] = (std::uint8_t)i;
    return t;
  }
  int operator[](int k) const { return idx[k]; }
  bool contains(int i) const {
    for (int k = 0; k < len; ++k)
      if (idx[k] == i) return true;
    return false;
  }
  /// Position i would occupy (count of entries < i).
  int insert_pos(int i) const {
    int p = 0;
    while (p < len && idx[p] < i) ++p;
    return p;
  }
  IndexTuple inserted(int i, int pos) const {
    IndexTuple t = *this;
    for (int k = len; k > pos; --k) t.idx[k] = t.idx[k - 1];
    t.idx[pos] = (std::uint8_t)i;
    t.len = (std::uint8_t)(len + 1);
    return t;
  }
  IndexTuple erased(int pos) const {
    IndexTuple t = *this;
    for (int k = pos; k + 1 < len; ++k) t.idx[k] = t.idx[k + 1];
    t.len = (std::uint8_t)(len - 1);
    t.idx[t.len] = 0;
    return t;
  }
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

/// Merge of two strictly increasing tuples with the permutation sign;
/// nullopt when they intersect.
std::optional<std::pair<IndexTuple, int>> merge_tuples(const IndexTuple& a, const IndexTuple& b);

/// All strictly increasing tuples of the given length over [0, nidx).
std::vector<IndexTuple> all_tuples(int nidx, int length);

enum class Variance { Covariant, Contravariant };

/// Graded antisymmetric tensor with polynomial coefficients. The index
/// universe size (nidx) is independent from the patch dimension so the same
/// container serves differential forms on the patch (nidx == patch.dim()),
/// forms on a Lie algebroid of any rank, and constant multivectors on a Lie
/// algebra (0-dimensional patch).
template <Variance V>
class AltTensor {
 public:
  AltTensor() : nidx_(0), degree_(0) {}
  // degree may exceed nidx; such tensors are identically zero (no strictly
  // increasing tuple exists), which keeps d of a top form well-defined.
  AltTensor(Patch patch, int nidx, int degree) : patch_(std::move(patch)), nidx_(nidx), degree_(degree) {
    if (degree < 0 || degree > kMaxTensorDegree)
      throw std::invalid_argument("AltTensor: degree out of range");
  }

  static AltTensor basis(Patch patch, int nidx, const IndexTuple& t) {
    AltTensor a(patch, nidx, t.len);
    a.terms_.emplace_back(t, Polynomial::constant(patch.dim(), Rational(1)));
    return a;
  }
  static AltTensor from_scalar(Patch patch, int nidx, Polynomial f) {
    AltTensor a(std::move(patch), nidx, 0);
    if (!f.is_zero()) a.terms_.emplace_back(IndexTuple{}, std::move(f));
    return a;
  }

  const Patch& patch() const { return patch_; }
  int nidx() const { return nidx_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<IndexTuple, Polynomial>>& terms() const { return terms_; }

  Polynomial coefficient(const IndexTuple& t) const {
    for (const auto& [k, p] : terms_)
      if (k == t) return p;
    return Polynomial(patch_.dim());
  }

  void add_term(const IndexTuple& t, Polynomial p) {
    if ((int)t.len != degree_) throw std::invalid_argument("AltTensor: tuple length != degree");
    for (int k = 0; k + 1 < t.len; ++k)
      if (t.idx[k] >= t.idx[k + 1]) throw std::invalid_argument("AltTensor: tuple not increasing");
    if (t.len > 0 && t.idx[t.len - 1] >= nidx_) throw std::out_of_range("AltTensor: index out of range");
    if (p.is_zero()) return;
    terms_.emplace_back(t, std::move(p));
    normalize();
  }

  AltTensor& operator+=(const AltTensor& o) {
    check_compatible(o);
    for (const auto& t : o.terms_) terms_.push_back(t);
    normalize();
    return *this;
  }
  AltTensor& operator-=(const AltTensor& o) { return *this += -o; }
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { a += b; return a; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { a -= b; return a; }
  AltTensor operator-() const {
    AltTensor a(patch_, nidx_, degree_);
    for (const auto& [t, p] : terms_) a.terms_.emplace_back(t, -p);
    return a;
  }
  friend AltTensor operator*(const AltTensor& a, const Rational& c) {
    AltTensor r(a.patch_, a.nidx_, a.degree_);
    if (c.is_zero()) return r;
    for (const auto& [t, p] : a.terms_) r.terms_.emplace_back(t, p * c);
    return r;
  }
  friend AltTensor operator*(const Rational& c, const AltTensor& a) { return a * c; }
  friend AltTensor operator*(const AltTensor& a, const Polynomial& f) {
    AltTensor r(a.patch_, a.nidx_, a.degree_);
    for (const auto& [t, p] : a.terms_) {
      Polynomial q = p * f;
      if (!q.is_zero()) r.terms_.emplace_back(t, std::move(q));
    }
    return r;
  }
  friend AltTensor operator*(const Polynomial& f, const AltTensor& a) { return a * f; }

  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.patch_ == b.patch_ && a.nidx_ == b.nidx_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AltTensor& a, const AltTensor& b) { return !(a == b); }

  /// Graded wedge product.
  friend AltTensor wedge(const AltTensor& a, const AltTensor& b) {
    a.check_compatible_ring(b);
    AltTensor r(a.patch_, a.nidx_, a.degree_ + b.degree_);
    for (const auto& [ta, pa] : a.terms_)
      for (const auto& [tb, pb] : b.terms_) {
        auto m = merge_tuples(ta, tb);
        if (!m) continue;
        Polynomial q = pa * pb;
        if (m->second < 0) q = -q;
        if (!q.is_zero()) r.terms_.emplace_back(m->first, std::move(q));
      }
    r.normalize();
    return r;
  }

  std::string to_string(const std::vector<std::string>& basis_symbols) const;
  std::string to_string() const;

 private:
  void check_compatible(const AltTensor& o) const {
    if (!(patch_ == o.patch_)) throw std::invalid_argument("AltTensor: patch mismatch");
    if (nidx_ != o.nidx_ || degree_ != o.degree_)
      throw std::invalid_argument("AltTensor: shape mismatch");
  }
  void check_compatible_ring(const AltTensor& o) const {
    if (!(patch_ == o.patch_)) throw std::invalid_argument("AltTensor: patch mismatch");
    if (nidx_ != o.nidx_) throw std::invalid_argument("AltTensor: index universe mismatch");
    if (degree_ + o.degree_ > kMaxTensorDegree)
      throw std::invalid_argument("AltTensor: wedge degree overflow");
  }
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      IndexTuple t = terms_[i].first;
      Polynomial p = std::move(terms_[i].second);
      ++i;
      while (i < terms_.size() && terms_[i].first == t) {
        p += terms_[i].second;
        ++i;
      }
      if (!p.is_zero()) terms_[out++] = {t, std::move(p)};
    }
    terms_.resize(out);
  }

  Patch patch_;
  int nidx_;
  int degree_;
  std::vector<std::pair<IndexTuple, Polynomial>> terms_;
};

using PolyForm = AltTensor<Variance::Covariant>;
using PolyMultivector = AltTensor<Variance::Contravariant>;

template <Variance V>
std::string AltTensor<V>::to_string(const std::vector<std::string>& basis_symbols) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, p] : terms_) {
    std::string basis;
    for (int k = 0; k < t.len; ++k) {
      if (k) basis += "^";
      basis += basis_symbols.at(t.idx[k]);
    }
    std::string coeff = p.to_string(patch_.var_names());
    std::string piece;
    if (basis.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = basis;
    } else if (coeff == "-1") {
      piece = "-" + basis;
    } else if (p.terms().size() > 1) {
      piece = "(" + coeff + ")*" + basis;
    } else {
      piece = coeff + "*" + basis;
    }
    if (!first) s += " + ";
    s += piece;
    first = false;
  }
  return s;
}

template <Variance V>
std::string AltTensor<V>::to_string() const {
  std::vector<std::string> syms;
  for (int i = 0; i < nidx_; ++i) {
    std::string base = (nidx_ == patch_.dim()) ? patch_.var_name(i) : ("e" + std::to_string(i + 1));
    if (nidx_ == patch_.dim())
      syms.push_back(V == Variance::Covariant ? "d" + base : "d/d" + base);
    else
      syms.push_back(base);
  }
  return to_string(syms);
}

}  // namespace phca

#endif

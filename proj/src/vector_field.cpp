#include "phca/vector_field.hpp"

#include <stdexcept>

namespace phca {

PolyVectorField::PolyVectorField(Patch patch) : patch_(std::move(patch)) {
  comp_.assign(patch_.dim(), Polynomial(patch_.dim()));
}

PolyVectorField::PolyVectorField(Patch patch, std::vector<Polynomial> components)
    : patch_(std::move(patch)), comp_(std::move(components)) {
  if ((int)comp_.size() != patch_.dim())
    throw std::invalid_argument("PolyVectorField: component count != patch dimension");
  for (const auto& c : comp_)
    if (c.nvars() != patch_.dim())
      throw std::invalid_argument("PolyVectorField: component nvars mismatch");
}

PolyVectorField PolyVectorField::coordinate(const Patch& patch, int i) {
  PolyVectorField x(patch);
  if (i < 0 || i >= patch.dim()) throw std::out_of_range("PolyVectorField::coordinate");
  x.comp_[i] = patch.constant(Rational(1));
  return x;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  Polynomial out(patch_.dim());
  for (int i = 0; i < patch_.dim(); ++i) {
    if (comp_[i].is_zero()) continue;
    out += comp_[i] * f.partial(i);
  }
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (!(patch_ == o.patch_)) throw std::invalid_argument("PolyVectorField: patch mismatch");
  for (int i = 0; i < (int)comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  PolyVectorField r = a;
  r += -b;
  return r;
}

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField r(patch_);
  for (int i = 0; i < (int)comp_.size(); ++i) r.comp_[i] = -comp_[i];
  return r;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x) {
  PolyVectorField r(x.patch_);
  for (int i = 0; i < (int)x.comp_.size(); ++i) r.comp_[i] = f * x.comp_[i];
  return r;
}

PolyVectorField operator*(const Rational& c, const PolyVectorField& x) {
  PolyVectorField r(x.patch_);
  for (int i = 0; i < (int)x.comp_.size(); ++i) r.comp_[i] = x.comp_[i] * c;
  return r;
}

PolyMultivector PolyVectorField::as_multivector() const {
  PolyMultivector m(patch_, patch_.dim(), 1);
  for (int i = 0; i < patch_.dim(); ++i)
    if (!comp_[i].is_zero()) m.add_term(IndexTuple::of({i}), comp_[i]);
  return m;
}

PolyVectorField PolyVectorField::from_multivector(const PolyMultivector& m) {
  if (m.degree() != 1 || m.nidx() != m.patch().dim())
    throw std::invalid_argument("from_multivector: not a vector field");
  PolyVectorField x(m.patch());
  for (const auto& [t, p] : m.terms()) x.comp_[t[0]] = p;
  return x;
}

std::string PolyVectorField::to_string() const { return as_multivector().to_string(); }

}  // namespace phca

#ifndef PHCA_VECTOR_FIELD_HPP
#define PHCA_VECTOR_FIELD_HPP

#include <string>
#include <vector>

#include "phca/alt_tensor.hpp"
#include "phca/patch.hpp"
#include "phca/polynomial.hpp"

namespace phca {

/// Vector field on a patch with one polynomial component per coordinate.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(Patch patch);
  PolyVectorField(Patch patch, std::vector<Polynomial> components);

  static PolyVectorField coordinate(const Patch& patch, int i);

  const Patch& patch() const { return patch_; }
  const Polynomial& component(int i) const { return comp_[i]; }
  const std::vector<Polynomial>& components() const { return comp_; }
  bool is_zero() const;

  /// Directional derivative X(f).
  Polynomial apply(const Polynomial& f) const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { a += b; return a; }
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  PolyVectorField operator-() const;
  friend PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x);
  friend PolyVectorField operator*(const Rational& c, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.patch_ == b.patch_ && a.comp_ == b.comp_;
  }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

  PolyMultivector as_multivector() const;
  static PolyVectorField from_multivector(const PolyMultivector& m);

  std::string to_string() const;

 private:
  Patch patch_;
  std::vector<Polynomial> comp_;
};

}  // namespace phca

#endif

#ifndef PHCA_PATCH_HPP
#define PHCA_PATCH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phca/polynomial.hpp"

namespace phca {

/// A single coordinate chart. Cheap to copy (shared immutable payload).
/// The optional para-split designates which coordinate directions span the
/// +1 and -1 eigendistributions of the standard coordinate-aligned
/// para-complex structure; blocks must have equal size.
class Patch {
 public:
  Patch() = default;
  explicit Patch(int dim);
  Patch(int dim, std::vector<std::string> names);
  Patch(int dim, std::vector<std::string> names,
        std::vector<int> plus_coords, std::vector<int> minus_coords);

  int dim() const { return d_ ? d_->dim : 0; }
  const std::string& var_name(int i) const { return d_->names.at(i); }
  const std::vector<std::string>& var_names() const { return d_->names; }

  bool has_split() const { return d_ && d_->plus.has_value(); }
  const std::vector<int>& plus_coords() const { return *d_->plus; }
  const std::vector<int>& minus_coords() const { return *d_->minus; }

  Polynomial zero() const { return Polynomial(dim()); }
  Polynomial constant(Rational c) const { return Polynomial::constant(dim(), std::move(c)); }
  Polynomial coordinate(int i) const { return Polynomial::variable(dim(), i); }

  friend bool operator==(const Patch& a, const Patch& b);
  friend bool operator!=(const Patch& a, const Patch& b) { return !(a == b); }

 private:
  struct Data {
    int dim = 0;
    std::vector<std::string> names;
    std::optional<std::vector<int>> plus, minus;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace phca

#endif

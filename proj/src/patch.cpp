#include "phca/patch.hpp"

#include <algorithm>
#include <stdexcept>

namespace phca {

namespace {
std::vector<std::string> default_names(int dim) {
  std::vector<std::string> n;
  n.reserve(dim);
  for (int i = 0; i < dim; ++i) n.push_back("x" + std::to_string(i + 1));
  return n;
}
}  // namespace

Patch::Patch(int dim) : Patch(dim, default_names(dim)) {}

Patch::Patch(int dim, std::vector<std::string> names) {
  if (dim < 0 || dim > kMaxVars)
    throw std::invalid_argument("Patch: dimension out of range");
  if ((int)names.size() != dim) throw std::invalid_argument("Patch: name count != dim");
  auto d = std::make_shared<Data>();
  d->dim = dim;
  d->names = std::move(names);
  d_ = std::move(d);
}

Patch::Patch(int dim, std::vector<std::string> names,
             std::vector<int> plus_coords, std::vector<int> minus_coords)
    : Patch(dim, std::move(names)) {
  if (dim % 2 != 0) throw std::invalid_argument("Patch: para-split needs even dimension");
  if ((int)plus_coords.size() != dim / 2 || (int)minus_coords.size() != dim / 2)
    throw std::invalid_argument("Patch: para-split blocks must have size dim/2");
  std::vector<bool> seen(dim, false);
  for (int i : plus_coords) {
    if (i < 0 || i >= dim || seen[i]) throw std::invalid_argument("Patch: bad para-split index");
    seen[i] = true;
  }
  for (int i : minus_coords) {
    if (i < 0 || i >= dim || seen[i]) throw std::invalid_argument("Patch: bad para-split index");
    seen[i] = true;
  }
  auto d = std::make_shared<Data>(*d_);
  d->plus = std::move(plus_coords);
  d->minus = std::move(minus_coords);
  d_ = std::move(d);
}

bool operator==(const Patch& a, const Patch& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->dim == b.d_->dim && a.d_->names == b.d_->names &&
         a.d_->plus == b.d_->plus && a.d_->minus == b.d_->minus;
}

}  // namespace phca

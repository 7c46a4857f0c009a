#ifndef PHCA_CARTAN_HPP
#define PHCA_CARTAN_HPP

#include <vector>

#include "phca/alt_tensor.hpp"
#include "phca/vector_field.hpp"

namespace phca {

/// Exterior derivative of a differential form (nidx must equal the patch
/// dimension). Degree rises by one; d∘d = 0.
PolyForm exterior_derivative(const PolyForm& a);

/// d of a function, as a 1-form.
PolyForm differential(const Patch& patch, const Polynomial& f);

/// Interior product; throws std::invalid_argument on degree-0 input.
PolyForm interior_product(const PolyVectorField& x, const PolyForm& a);

/// First-slot contraction of a multivector with a 1-form, with the fixed
/// convention i_mu(e^f) = mu(e) f - mu(f) e.
PolyMultivector contract_covector(const PolyForm& mu, const PolyMultivector& p);

/// Lie bracket of vector fields, componentwise X(Y^i) - Y(X^i).
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// Cartan magic formula L_X = i_X d + d i_X (the defining computation here).
PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& a);

/// Schouten bracket of multivectors, degree |P|+|Q|-1, with the sign
/// convention [pi,pi](df,dg,dh) = 2 * Jacobiator of the induced bracket.
PolyMultivector schouten_bracket(const PolyMultivector& p, const PolyMultivector& q);

/// Evaluation of a k-form on k vector fields (determinant expansion).
Polynomial evaluate(const PolyForm& a, const std::vector<PolyVectorField>& args);

/// Evaluation of a k-multivector on k 1-forms.
Polynomial evaluate(const PolyMultivector& p, const std::vector<PolyForm>& covectors);

}  // namespace phca

#endif

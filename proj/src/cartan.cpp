#include "phca/cartan.hpp"

#include <stdexcept>

namespace phca {

namespace {

void require_form_on_patch(const PolyForm& a) {
  if (a.nidx() != a.patch().dim())
    throw std::invalid_argument("expected a differential form (nidx == patch dim)");
}

// Laplace expansion along the first row; entries are tiny at desk scale.
Polynomial poly_det(std::vector<std::vector<Polynomial>>& m, std::vector<int>& cols, int row, int nvars) {
  if (cols.empty()) return Polynomial::constant(nvars, Rational(1));
  Polynomial out(nvars);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& pivot = m[row][cols[c]];
    if (pivot.is_zero()) continue;
    int col = cols[c];
    cols.erase(cols.begin() + c);
    Polynomial sub = poly_det(m, cols, row + 1, nvars);
    cols.insert(cols.begin() + c, col);
    Polynomial term = pivot * sub;
    if (c % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

}  // namespace

PolyForm exterior_derivative(const PolyForm& a) {
  require_form_on_patch(a);
  const int n = a.patch().dim();
  PolyForm out(a.patch(), n, a.degree() + 1);
  if (a.degree() >= n) return out;
  for (const auto& [t, p] : a.terms()) {
    for (int v = 0; v < n; ++v) {
      if (t.contains(v)) continue;
      Polynomial q = p.partial(v);
      if (q.is_zero()) continue;
      int pos = t.insert_pos(v);
      if (pos % 2 == 1) q = -q;
      out.add_term(t.inserted(v, pos), std::move(q));
    }
  }
  return out;
}

PolyForm differential(const Patch& patch, const Polynomial& f) {
  return exterior_derivative(PolyForm::from_scalar(patch, patch.dim(), f));
}

PolyForm interior_product(const PolyVectorField& x, const PolyForm& a) {
  require_form_on_patch(a);
  if (!(x.patch() == a.patch())) throw std::invalid_argument("interior_product: patch mismatch");
  if (a.degree() == 0) throw std::invalid_argument("interior_product: degree-0 input");
  PolyForm out(a.patch(), a.nidx(), a.degree() - 1);
  for (const auto& [t, p] : a.terms()) {
    for (int m = 0; m < t.len; ++m) {
      const Polynomial& comp = x.component(t[m]);
      if (comp.is_zero()) continue;
      Polynomial q = comp * p;
      if (m % 2 == 1) q = -q;
      out.add_term(t.erased(m), std::move(q));
    }
  }
  return out;
}

PolyMultivector contract_covector(const PolyForm& mu, const PolyMultivector& p) {
  if (mu.degree() != 1) throw std::invalid_argument("contract_covector: need a 1-form");
  if (!(mu.patch() == p.patch()) || mu.nidx() != p.nidx())
    throw std::invalid_argument("contract_covector: shape mismatch");
  if (p.degree() == 0) throw std::invalid_argument("contract_covector: degree-0 input");
  PolyMultivector out(p.patch(), p.nidx(), p.degree() - 1);
  for (const auto& [t, c] : p.terms()) {
    for (int m = 0; m < t.len; ++m) {
      Polynomial comp = mu.coefficient(IndexTuple::of({t[m]}));
      if (comp.is_zero()) continue;
      Polynomial q = comp * c;
      if (m % 2 == 1) q = -q;
      out.add_term(t.erased(m), std::move(q));
    }
  }
  return out;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (!(x.patch() == y.patch())) throw std::invalid_argument("lie_bracket: patch mismatch");
  const int n = x.patch().dim();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) comps.push_back(x.apply(y.component(i)) - y.apply(x.component(i)));
  return PolyVectorField(x.patch(), std::move(comps));
}

PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& a) {
  require_form_on_patch(a);
  if (a.degree() == 0) return interior_product(x, exterior_derivative(a));
  return interior_product(x, exterior_derivative(a)) +
         exterior_derivative(interior_product(x, a));
}

namespace {

// Left derivative with respect to the odd coordinate i.
PolyMultivector theta_partial(const PolyMultivector& p, int i) {
  PolyMultivector out(p.patch(), p.nidx(), p.degree() > 0 ? p.degree() - 1 : 0);
  if (p.degree() == 0) return out;
  for (const auto& [t, c] : p.terms()) {
    for (int m = 0; m < t.len; ++m) {
      if (t[m] != i) continue;
      Polynomial q = (m % 2 == 1) ? -c : c;
      out.add_term(t.erased(m), std::move(q));
      break;
    }
  }
  return out;
}

PolyMultivector coeff_partial(const PolyMultivector& p, int v) {
  PolyMultivector out(p.patch(), p.nidx(), p.degree());
  for (const auto& [t, c] : p.terms()) {
    Polynomial q = c.partial(v);
    if (!q.is_zero()) out.add_term(t, std::move(q));
  }
  return out;
}

}  // namespace

PolyMultivector schouten_bracket(const PolyMultivector& p, const PolyMultivector& q) {
  if (!(p.patch() == q.patch()) || p.nidx() != q.nidx())
    throw std::invalid_argument("schouten_bracket: shape mismatch");
  if (p.nidx() != p.patch().dim())
    throw std::invalid_argument("schouten_bracket: multivector fields only");
  const int n = p.patch().dim();
  const int dp = p.degree(), dq = q.degree();
  const int deg = dp + dq - 1;
  PolyMultivector out(p.patch(), n, deg < 0 ? 0 : deg);
  if (deg < 0) return out;
  for (int i = 0; i < n; ++i) {
    out += wedge(theta_partial(p, i), coeff_partial(q, i));
  }
  int sign = ((dp - 1) * (dq - 1)) % 2 == 0 ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    PolyMultivector w = wedge(theta_partial(q, i), coeff_partial(p, i));
    if (sign > 0)
      out -= w;
    else
      out += w;
  }
  return out;
}

Polynomial evaluate(const PolyForm& a, const std::vector<PolyVectorField>& args) {
  if ((int)args.size() != a.degree()) throw std::invalid_argument("evaluate: argument count");
  const int nvars = a.patch().dim();
  Polynomial out(nvars);
  const int k = a.degree();
  if (k == 0) {
    for (const auto& [t, p] : a.terms()) out += p;
    return out;
  }
  for (const auto& [t, p] : a.terms()) {
    std::vector<std::vector<Polynomial>> m(k);
    for (int r = 0; r < k; ++r) {
      m[r].reserve(k);
      for (int c = 0; c < k; ++c) m[r].push_back(args[c].component(t[r]));
    }
    std::vector<int> cols(k);
    for (int c = 0; c < k; ++c) cols[c] = c;
    out += p * poly_det(m, cols, 0, nvars);
  }
  return out;
}

Polynomial evaluate(const PolyMultivector& p, const std::vector<PolyForm>& covectors) {
  if ((int)covectors.size() != p.degree()) throw std::invalid_argument("evaluate: argument count");
  const int nvars = p.patch().dim();
  Polynomial out(nvars);
  const int k = p.degree();
  if (k == 0) {
    for (const auto& [t, c] : p.terms()) out += c;
    return out;
  }
  for (const auto& [t, c] : p.terms()) {
    std::vector<std::vector<Polynomial>> m(k);
    for (int r = 0; r < k; ++r) {
      m[r].reserve(k);
      for (int col = 0; col < k; ++col)
        m[r].push_back(covectors[col].coefficient(IndexTuple::of({t[r]})));
    }
    std::vector<int> cols(k);
    for (int col = 0; col < k; ++col) cols[col] = col;
    out += c * poly_det(m, cols, 0, nvars);
  }
  return out;
}

}  // namespace phca

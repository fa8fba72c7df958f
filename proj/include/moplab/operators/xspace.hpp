#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/core/matrix.hpp"
#include "moplab/core/sparse_poly.hpp"
#include "moplab/detquotient/multivariate.hpp"
#include "moplab/models/single_variable.hpp"
#include "moplab/symfun/sympoly.hpp"

namespace moplab {

struct NonPolynomialResult : std::domain_error {
  using std::domain_error::domain_error;
};

// Polynomials in x_1..x_N (variable index i-1).
template <class F>
using XPoly = SparsePoly<F>;

template <class F>
XPoly<F> x_var(int i) {
  return XPoly<F>::var(i);
}

// p_k -> sum_i x_i^k
template <class F, class C>
XPoly<F> sym_to_x(const SymPoly<C>& f, int n) {
  std::vector<XPoly<F>> pk(1, XPoly<F>(F(n)));
  auto p = [&](int k) -> const XPoly<F>& {
    while (static_cast<int>(pk.size()) <= k) {
      int e = static_cast<int>(pk.size());
      XPoly<F> s;
      for (int i = 0; i < n; ++i) s = s + XPoly<F>::var(i, F(1), e);
      pk.push_back(std::move(s));
    }
    return pk[static_cast<size_t>(k)];
  };
  XPoly<F> acc;
  for (auto& [lam, c] : f.terms()) {
    XPoly<F> t{F(c)};
    for (int part : lam.parts()) t = t * p(part);
    acc = acc + t;
  }
  return acc;
}

// f(x_i) for a dense polynomial f, optionally in x_i^2.
template <class F>
XPoly<F> tpoly_at(const TPoly<F>& f, int i, bool squared = false) {
  XPoly<F> acc;
  for (size_t k = 0; k < f.c.size(); ++k)
    if (!f.c[k].is_zero()) acc = acc + XPoly<F>::var(i, f.c[k], static_cast<int>(squared ? 2 * k : k));
  return acc;
}

// Exact division by (x_i - x_j) or (x_i^2 - x_j^2).
template <class F>
XPoly<F> divide_by_difference(const XPoly<F>& f, int i, int j, bool squared = false) {
  int e = squared ? 2 : 1;
  XPoly<F> g = XPoly<F>::var(i, F(1), e) - XPoly<F>::var(j, F(1), e);
  auto q = f.divide_exact(g);
  if (!q) throw NonPolynomialResult("not divisible by x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1));
  return *q;
}

template <class F>
XPoly<F> divide_by_vandermonde(XPoly<F> f, int n, bool squared = false) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f = divide_by_difference(f, i, j, squared);
  return f;
}

// det(P_{R_j+N-j}(t_i)) / Delta(t), t = x or x^2 by family base.
template <class F>
XPoly<F> multivariate_x(const Family<F>& fam, const Partition& r, int n) {
  auto lam = shifted_parts(r, n);
  bool sq = fam.base() == BaseKind::XSquared;
  Matrix<XPoly<F>> m(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(static_cast<size_t>(i), static_cast<size_t>(j)) = tpoly_at(fam.p_poly(lam[j]), i, sq);
  return divide_by_vandermonde(determinant(m), n, sq);
}

// ---- differential operators ----------------------------------------------

template <class F>
XPoly<F> laplacian(const XPoly<F>& f, int n) {
  XPoly<F> acc;
  for (int i = 0; i < n; ++i) acc = acc + f.derivative(i).derivative(i);
  return acc;
}

template <class F>
XPoly<F> euler(const XPoly<F>& f, int n) {
  XPoly<F> acc;
  for (int i = 0; i < n; ++i) acc = acc + x_var<F>(i) * f.derivative(i);
  return acc;
}

template <class F>
XPoly<F> sum_partials(const XPoly<F>& f, int n) {
  XPoly<F> acc;
  for (int i = 0; i < n; ++i) acc = acc + f.derivative(i);
  return acc;
}

// sum_i x_i^e d^2/dx_i^2
template <class F>
XPoly<F> weighted_second(const XPoly<F>& f, int n, int e) {
  XPoly<F> acc;
  for (int i = 0; i < n; ++i) acc = acc + XPoly<F>::var(i, F(1), e) * f.derivative(i).derivative(i);
  return acc;
}

// sum_{i != j} x_i^e (x_i - x_j)^{-1} d f / d x_i, cancellation verified.
template <class F>
XPoly<F> pair_term(const XPoly<F>& f, int n, int e = 0) {
  XPoly<F> acc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      XPoly<F> num = XPoly<F>::var(i, F(1), e) * f.derivative(i) - XPoly<F>::var(j, F(1), e) * f.derivative(j);
      acc = acc + divide_by_difference(num, i, j);
    }
  return acc;
}

// sum d^2 + 2 beta sum_{i != j} (x_j - x_i)^{-1} d_j - sum x_i d_i
template <class F>
XPoly<F> calogero(const XPoly<F>& f, int n, const F& beta = F(1)) {
  return laplacian(f, n) + pair_term(f, n).scaled(F(2) * beta) - euler(f, n);
}

// sum d^2 - 2 sum_{i != j} (x_i - x_j)^{-1} d_i as printed for W2 alone.
template <class F>
XPoly<F> w2_x_printed(const XPoly<F>& f, int n) {
  return laplacian(f, n) - pair_term(f, n).scaled(F(2));
}

// W2 in the Calogero form: sum d^2 - 2 sum_{i != j} (x_i - x_j)^{-1} d_j.
template <class F>
XPoly<F> w2_x(const XPoly<F>& f, int n, const F& beta = F(1)) {
  return laplacian(f, n) + pair_term(f, n).scaled(F(2) * beta);
}

// Multivariate shifted-Jacobi operator for x^u (1-x)^v Delta^2 on [0,1]^N:
// sum x(1-x) d^2 + ((u+1) - (u+v+2) x) d + 2 sum_{i != j} x_i(1-x_i)/(x_i-x_j) d_i.
template <class F>
XPoly<F> jacobi_x(const XPoly<F>& f, int n, const F& u, const F& v) {
  XPoly<F> a1 = weighted_second(f, n, 1) + pair_term(f, n, 1).scaled(F(2));
  XPoly<F> a2 = weighted_second(f, n, 2) + pair_term(f, n, 2).scaled(F(2));
  return a1 - a2 + sum_partials(f, n).scaled(u + F(1)) - euler(f, n).scaled(u + v + F(2));
}

// ---- MP difference operator ------------------------------------------------

// N A - N u B over the phase-free polynomials, where
// A = sum_j (lambda - i x_j) prod_{k != j} (x_j - x_k + i)/(x_j - x_k) [f(x_j + i) - f],
// B = sum_j (lambda + i x_j) prod_{k != j} (x_k - x_j + i)/(x_k - x_j) [f(x_j - i) - f].
// `prefactor` multiplies both sums (the printed N, or 1).
template <class F>
XPoly<F> mp_difference_x(const XPoly<F>& f, int n, const F& lambda, const F& u, const F& prefactor) {
  const F i = F::i();
  XPoly<F> total;
  XPoly<F> vdm(F(1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) vdm = vdm * (x_var<F>(a) - x_var<F>(b));
  for (int j = 0; j < n; ++j) {
    // Delta / prod_{k != j}(x_j - x_k)
    XPoly<F> rest(F(1));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (a != j && b != j) rest = rest * (x_var<F>(a) - x_var<F>(b));
    F sgn = j % 2 ? F(-1) : F(1);
    XPoly<F> prod_a(F(1)), prod_b(F(1));
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      prod_a = prod_a * (x_var<F>(j) - x_var<F>(k) + XPoly<F>(i));
      prod_b = prod_b * (x_var<F>(k) - x_var<F>(j) + XPoly<F>(i));
    }
    // prod_{k != j}(x_k - x_j) = (-1)^{n-1} prod (x_j - x_k)
    F sgn_b = sgn * ((n - 1) % 2 ? F(-1) : F(1));
    XPoly<F> ta = (XPoly<F>(lambda) - x_var<F>(j).scaled(i)) * prod_a * (f.shift(j, i) - f);
    XPoly<F> tb = (XPoly<F>(lambda) + x_var<F>(j).scaled(i)) * prod_b * (f.shift(j, -i) - f);
    total = total + (ta.scaled(sgn) - tb.scaled(sgn_b * u)) * rest;
  }
  auto q = total.divide_exact(vdm);
  if (!q) throw NonPolynomialResult("MP difference operator: singular terms do not cancel");
  return q->scaled(prefactor);
}

}  // namespace moplab

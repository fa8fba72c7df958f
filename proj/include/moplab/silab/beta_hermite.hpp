#pragma once

#include <string>

#include "moplab/core/report.hpp"
#include "moplab/models/models.hpp"
#include "moplab/operators/ps_operator.hpp"
#include "moplab/operators/xspace.hpp"
#include "moplab/symfun/jack.hpp"

namespace moplab {

// exp(-W2^beta / 2) P_R in x_1..x_N.
template <class F>
XPoly<F> beta_hermite_x(const Partition& r, int n, const F& beta) {
  auto p = jack(r, JackParams<F>{beta});
  return sym_to_x<F>(exp_ps(w2_beta(F(n), beta), F(Rational(-1, 2)), p), n);
}

// prod_{i<j} (x_i - x_j)^{2 beta}, beta a positive integer.
template <class F>
XPoly<F> vandermonde_power(int n, int two_beta) {
  XPoly<F> out{F(1)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < two_beta; ++k) out = out * (x_var<F>(i) - x_var<F>(j));
  return out;
}

// Integral against prod e^{-x_i^2/2} dx_i, in units of (2 pi)^{N/2}.
template <class F>
F gaussian_integral(const XPoly<F>& f, int n) {
  F acc(0);
  for (auto& [m, c] : f.terms()) {
    F t = c;
    for (int i = 0; i < n && !t.is_zero(); ++i) t = t * gaussian_moment<F>(m.e[static_cast<size_t>(i)]);
    acc = acc + t;
  }
  return acc;
}

// <f> under Delta^{2 beta} e^{-x^2/2}, normalized so that <1> = 1.
template <class F>
F beta_expectation(const XPoly<F>& f, int n, int two_beta) {
  auto w = vandermonde_power<F>(n, two_beta);
  return gaussian_integral(f * w, n) / gaussian_integral(w, n);
}

inline int integer_two_beta(const Rational& beta) {
  Rational t = beta * Rational(2);
  if (!t.is_integer() || t.sign() <= 0) throw std::invalid_argument("beta-hermite: 2 beta must be a positive integer");
  return static_cast<int>(t.numerator().get_si());
}

template <class F>
Report beta_orthogonality_check(const Partition& r, const Partition& q, int n, const Rational& beta) {
  F b(beta);
  F g = beta_expectation(beta_hermite_x(r, n, b) * beta_hermite_x(q, n, b), n, integer_two_beta(beta));
  std::string id = r == q ? "beta-hermite:norm" : "beta-hermite:orthogonality";
  Report rep = make_report(id, "gaussian-hermite", r, q, n, ParamScalar(g), ParamScalar(r == q ? g : F(0)));
  if (r == q) rep.equal = !g.is_zero();
  return rep;
}

// beta-Calogero operator on H^beta_R, eigenvalue -|R|.
template <class F>
Report beta_eigen_check(const Partition& r, int n, const Rational& beta) {
  auto h = beta_hermite_x(r, n, F(beta));
  auto img = calogero(h, n, F(beta));
  F e = img.is_zero() ? F(0) : img.leading().second / h.leading().second;
  Report rep = make_report("beta-hermite:eigen", "gaussian-hermite", r, std::nullopt, n, ParamScalar(e), ParamScalar(-r.size()));
  rep.equal = rep.equal && img == h.scaled(e);
  return rep;
}

// <P_R> against xi^beta_R P_R{delta_{k,2}}; any mismatch is the normalization
// factor the printed J would have to carry. `per_box` divides the right side by
// beta^{|R|/2}, i.e. evaluates at p_k = delta_{k,2} / beta.
template <class F>
Report beta_si_check(const Partition& r, int n, const Rational& beta, bool per_box = false) {
  F b(beta);
  auto p = jack(r, JackParams<F>{b});
  F lhs = beta_expectation(sym_to_x<F>(p, n), n, integer_two_beta(beta));
  F rhs = xi_beta(r, F(n), b) * eval_delta(p, 2);
  if (per_box && r.size() % 2 == 0) rhs = rhs / ipow(b, r.size() / 2);
  return make_report(per_box ? "beta-hermite:si:per-box" : "beta-hermite:si", "gaussian-hermite", r, std::nullopt, n,
                     ParamScalar(lhs), ParamScalar(rhs));
}

}  // namespace moplab

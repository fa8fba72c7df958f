#pragma once

#include <optional>
#include <string>

#include "moplab/core/report.hpp"
#include "moplab/detquotient/multivariate.hpp"
#include "moplab/models/closed_form.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

// Andreief oracle against the closed form selected by `cf`.
template <class F>
Report verify_si(const ModelId<F>& m, const Partition& r, int n, const ClosedForm& cf) {
  if (r.length() > n) throw ShapeTooLong(r.str() + " has more than " + std::to_string(n) + " rows");
  F lhs = andreief_expectation(base_family(m), r, n);
  F rhs = closed_form_expectation(cf, m, r, n);
  return make_report("si", model_name(m.kind), r, std::nullopt, n, ParamScalar(lhs), ParamScalar(rhs), cf.str());
}

// <S_R H_Q> = S_{R/Q}{delta_2} xi_R(N); zero when Q is not inside R.
template <class F = GaussianRational>
Report verify_strong_si(const Partition& r, const Partition& q, int n) {
  F lhs = andreief_bilinear(gaussian_monomial_family<F>(), hermite_family<F>(), r, q, n);
  F rhs(0);
  if (r.contains(q)) rhs = F(eval_delta(skew_schur(r, q), 2)) * xi(r, F(n));
  return make_report("strong-si", "gaussian-hermite", r, q, n, ParamScalar(lhs), ParamScalar(rhs));
}

// ---- Jacobi norm ------------------------------------------------------------

// Gamma(x+k)/Gamma(x), also for k < 0.
template <class F>
F pochhammer_gamma(const F& x, int k) {
  if (k >= 0) return pochhammer(x, k);
  F out(1);
  for (int t = 1; t <= -k; ++t) out = out * factored(x - F(t));
  return F(1) / out;
}

// prod_i (2N+u+v+1-i)_{2R_i-i+1} (N+u+v+R_i-i+1)_{N+R_i-i}, as printed.
template <class F>
F jacobi_norm_printed(const Partition& r, int n, const F& u, const F& v) {
  F out(1);
  for (int i = 1; i <= n; ++i) {
    int ri = r.row(i);
    out = out * pochhammer_gamma(F(2 * n + 1 - i) + u + v, 2 * ri - i + 1) *
          pochhammer_gamma(F(n + ri - i + 1) + u + v, n + ri - i);
  }
  return out;
}

// n! (1+u)_n (1+v)_n / ((u+v+n+1)_n (u+v+2)_{2n})
template <class F>
F jacobi_single_norm(int k, const F& u, const F& v) {
  return F(factorial(k)) * pochhammer(F(1) + u, k) * pochhammer(F(1) + v, k) /
         (pochhammer(u + v + F(k + 1), k) * pochhammer(u + v + F(2), 2 * k));
}

// Andreief norm relative to R = empty: prod_j h(R_j+N-j) / h(N-j).
template <class F>
F jacobi_norm_derived(const Partition& r, int n, const F& u, const F& v) {
  auto lam = shifted_parts(r, n);
  F out(1);
  for (int j = 0; j < n; ++j) out = out * jacobi_single_norm(lam[j], u, v) / jacobi_single_norm(n - 1 - j, u, v);
  return out;
}

// Compares ||J_R||^2 / ||J_0||^2 (Andreief) with the printed formula, or
// with the product of single-variable norms when `derived`.
template <class F>
Report jacobi_norm_check(const Partition& r, int n, const F& u, const F& v, bool derived = false) {
  auto fam = jacobi_family(u, v);
  F lhs = andreief_gram(fam, r, r, n) / andreief_gram(fam, Partition{}, Partition{}, n);
  F rhs = derived ? jacobi_norm_derived(r, n, u, v) : jacobi_norm_printed(r, n, u, v) / jacobi_norm_printed(Partition{}, n, u, v);
  return make_report(derived ? "jacobi-norm:derived" : "jacobi-norm", "selberg-jacobi", r, std::nullopt, n, ParamScalar(lhs),
                     ParamScalar(rhs));
}

// ---- MP expansions --------------------------------------------------------

// prod_{R/Q} (2 lambda + N + j - i - 1)(N + j - i) S_{R/Q}{delta_1} / w^{|R|-|Q|}
template <class F>
F mp_expansion_shape(const Partition& r, const Partition& q, int n, const F& lambda, const F& w) {
  return xi_ratio(r, q, F(2) * lambda + F(n - 1), false) * xi_ratio(r, q, F(n), false) *
         F(eval_delta(skew_schur(r, q), 1)) / ipow(factored(w), r.size() - q.size());
}

// Q_R normalized to leading Theta_R coefficient 1. Forward: C_RQ / C_RR;
// inverse: Cv_RQ C_QQ. Printed factors: 1/(1-u)^k forward, 1/(u-1)^k inverse;
// `printed = false` exchanges them.
template <class F>
Report mp_expansion_check(const Partition& r, const Partition& q, int n, const F& lambda, const F& u, bool inverse,
                          bool printed = false) {
  auto fam = mp_family(lambda, u);
  F lhs = inverse ? inverse_expansion(fam, r, n).at(q) * multivariate(fam, q, n).at(q)
                  : [&] {
                      auto ex = multivariate(fam, r, n);
                      return ex.at(q) / ex.at(r);
                    }();
  bool one_minus_u = inverse != printed;
  F rhs = mp_expansion_shape(r, q, n, lambda, one_minus_u ? F(1) - u : u - F(1));
  std::string id = std::string(inverse ? "mp-expansion:inverse" : "mp-expansion") + (printed ? ":printed" : "");
  return make_report(id, "meixner-pollaczek", r, q, n, ParamScalar(lhs), ParamScalar(rhs));
}

// Theta_empty for the MP base is the constant i^{N(N-1)/2}.
template <class F>
Report mp_theta_empty_check(int n, const F& lambda, const F& u) {
  F lhs = theta_empty(mp_theta_family(lambda, u), n);
  F rhs = i_pow<F>(static_cast<long long>(n) * (n - 1) / 2);
  return make_report("mp-theta-empty", "meixner-pollaczek", Partition{}, std::nullopt, n, ParamScalar(lhs), ParamScalar(rhs));
}

// ---- Hermite expansion signs ------------------------------------------------

// H_R = sum sign * S_{R/Q}{delta_2} xi_R/xi_Q(N) S_Q, sign = (-1)^{(|R|-|Q|)/2}
// when `signed_form`; the inverse direction likewise.
template <class F = GaussianRational>
Report hermite_expansion_check(const Partition& r, const Partition& q, int n, bool inverse, bool signed_form) {
  auto fam = hermite_family<F>();
  auto ex = inverse ? inverse_expansion(fam, r, n) : multivariate(fam, r, n);
  F rhs = F(eval_delta(skew_schur(r, q), 2)) * xi_ratio(r, q, F(n), false);
  if (signed_form) rhs = rhs * sign_pow<F>((r.size() - q.size()) / 2);
  std::string id = std::string(inverse ? "hermite-expansion:inverse" : "hermite-expansion") + (signed_form ? ":signed" : "");
  return make_report(id, "gaussian-hermite", r, q, n, ParamScalar(ex.at(q)), ParamScalar(rhs));
}

}  // namespace moplab

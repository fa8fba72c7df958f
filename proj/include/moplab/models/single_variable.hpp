#pragma once

#include <string>

#include "moplab/core/report.hpp"
#include "moplab/models/models.hpp"

namespace moplab {

inline Partition row_shape(int n) { return n > 0 ? Partition{n} : Partition{}; }

// P_n as a dense polynomial in x (t = x or t = x^2).
template <class F>
TPoly<F> x_poly(const Family<F>& fam, int n) {
  TPoly<F> p = fam.p_poly(n);
  if (fam.base() == BaseKind::X) return p;
  TPoly<F> out;
  out.c.assign(p.c.empty() ? 0 : 2 * p.c.size() - 1, F(0));
  for (size_t k = 0; k < p.c.size(); ++k) out.c[2 * k] = p.c[k];
  return out;
}

template <class F>
TPoly<F> derivative(const TPoly<F>& p) {
  TPoly<F> d;
  for (size_t k = 1; k < p.c.size(); ++k) d.c.push_back(p.c[k] * F(static_cast<long long>(k)));
  return d;
}

// p(x + s)
template <class F>
TPoly<F> shifted(const TPoly<F>& p, const F& s) {
  TPoly<F> out;
  const TPoly<F> lin{{s, F(1)}};
  for (size_t k = p.c.size(); k-- > 0;) out = out * lin + TPoly<F>{{p.c[k]}};
  return out;
}

template <class F>
ParamScalar at_symbol(const TPoly<F>& p, const std::string& var = "x") {
  ParamScalar x = ParamScalar::symbol(var), acc(0);
  for (size_t k = p.c.size(); k-- > 0;) acc = acc * x + ParamScalar(p.c[k]);
  return acc;
}

template <class F>
TPoly<F> constant_poly(const F& c) {
  return TPoly<F>{{c}};
}

// H'' - x H' + n H = 0; the printed form H'' + 2x H' + n H = 0 with literal = true.
template <class F>
Report hermite_ode_check(int n, bool literal = false) {
  auto h = x_poly(hermite_family<F>(), n);
  TPoly<F> x{{F(0), F(1)}};
  auto d1 = derivative(h), d2 = derivative(d1);
  TPoly<F> lhs = literal ? d2 + (x * d1).scaled(F(2)) + h.scaled(F(n)) : d2 - x * d1 + h.scaled(F(n));
  return make_report(literal ? "hermite-ode-printed" : "hermite-ode", "gaussian-hermite", row_shape(n), std::nullopt, 1,
                     at_symbol(lhs), ParamScalar(0));
}

// e^{x^2/2} d^n/dx^n e^{-x^2/2} = (-1)^n H_n
template <class F>
Report rodrigues_check(int n) {
  TPoly<F> x{{F(0), F(1)}};
  TPoly<F> r{{F(1)}};
  for (int k = 0; k < n; ++k) r = derivative(r) - x * r;
  auto h = x_poly(hermite_family<F>(), n);
  return make_report("rodrigues", "gaussian-hermite", row_shape(n), std::nullopt, 1, at_symbol(r),
                     at_symbol(h.scaled(sign_pow<F>(n))));
}

// Phase-free MP difference equation, multiplied through by e^{i phi} and by u:
// u (ix+lambda)(q(x) - q(x-i)) + (ix-lambda)(q(x) - q(x+i)) = n (1-u) q(x).
template <class F>
Report mp_difference_check(int n, const F& lambda, const F& u) {
  auto q = x_poly(mp_family(lambda, u), n);
  const F i = F::i();
  TPoly<F> ix_plus{{lambda, i}}, ix_minus{{-lambda, i}};
  TPoly<F> lhs = (ix_plus * (q - shifted(q, -i))).scaled(u) + ix_minus * (q - shifted(q, i));
  TPoly<F> rhs = q.scaled(F(n) * (F(1) - u));
  return make_report("mp-difference", "meixner-pollaczek", row_shape(n), std::nullopt, 1, at_symbol(lhs), at_symbol(rhs));
}

// B(x)(W(x+i) - W(x)) + D(x)(W(x-i) - W(x)) = n(n-1+z) W(x), cleared of the
// denominator 2ix(2ix-1)(2ix+1).
template <class F>
Report wilson_difference_check(int n, const F& a, const F& b, const F& c, const F& d) {
  auto w = x_poly(wilson_family(a, b, c, d, false), n);
  const F i = F::i();
  auto lin = [&](const F& p, const F& s) { return TPoly<F>{{p, s}}; };
  TPoly<F> nb = lin(a, -i) * lin(b, -i) * lin(c, -i) * lin(d, -i) * lin(F(1), F(2) * i);
  TPoly<F> nd = lin(a, i) * lin(b, i) * lin(c, i) * lin(d, i) * lin(F(-1), F(2) * i);
  TPoly<F> den = lin(F(0), F(2) * i) * lin(F(-1), F(2) * i) * lin(F(1), F(2) * i);
  TPoly<F> lhs = nb * (shifted(w, i) - w) + nd * (shifted(w, -i) - w);
  TPoly<F> rhs = (den * w).scaled(F(n) * (F(n - 1) + a + b + c + d));
  return make_report("wilson-difference", "wilson", row_shape(n), std::nullopt, 1, at_symbol(lhs), at_symbol(rhs));
}

}  // namespace moplab

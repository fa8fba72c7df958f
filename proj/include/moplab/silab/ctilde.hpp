#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "moplab/core/report.hpp"
#include "moplab/core/univariate.hpp"
#include "moplab/detquotient/multivariate.hpp"
#include "moplab/models/models.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

struct NotUVSum : std::domain_error {
  using std::domain_error::domain_error;
};

// v -> s - u; the result must be free of u.
inline ParamScalar to_uv_sum(const ParamScalar& x) {
  const int u = symbol_id("u"), v = symbol_id("v");
  ParamScalar y = x.substitute({{v, ParamScalar::symbol("s") - ParamScalar::symbol("u")}});
  for (int k : y.variables())
    if (k == u) throw NotUVSum("depends on u and v separately: " + x.str());
  return y;
}

// C_RQ with S_R = sum C_RQ J_Q, divided by (xi_R/xi_Q)(N) (xi_R/xi_Q)(u+N).
inline ParamScalar ctilde(const Partition& r, const Partition& q, int n) {
  const ParamScalar u = ParamScalar::symbol("u"), v = ParamScalar::symbol("v");
  ParamScalar c = inverse_expansion(jacobi_family(u, v), r, n).at(q);
  ParamScalar out = c / (xi_ratio(r, q, ParamScalar(n), false) * xi_ratio(r, q, u + ParamScalar(n), false));
  to_uv_sum(out);
  return out;
}

// Displayed values, transcribed.
inline std::map<std::pair<Partition, Partition>, ParamScalar> ctilde_displayed() {
  const ParamScalar s = ParamScalar::symbol("u") + ParamScalar::symbol("v");
  const ParamScalar u = ParamScalar::symbol("u"), v = ParamScalar::symbol("v");
  auto lin = [&](int k) { return factored(s + ParamScalar(k)); };
  ParamScalar a = (ParamScalar(5) * s + ParamScalar(26)) / (lin(2) * lin(4) * lin(5) * lin(6) * lin(7));
  ParamScalar den = lin(2) * lin(3);
  for (int i = 4; i <= 11; ++i) den = den * lin(i);
  ParamScalar num = ParamScalar(17) * u * u + u * (ParamScalar(34) * v + ParamScalar(232)) + v * (ParamScalar(17) * v + ParamScalar(232)) +
                    ParamScalar(795);
  return {{{Partition{3, 2}, Partition{1}}, a}, {{Partition{6, 3}, Partition{2}}, num / den}};
}

inline Report ctilde_example_check(const Partition& r, const Partition& q) {
  auto shown = ctilde_displayed().at({r, q});
  return make_report("ctilde:displayed", "selberg-jacobi", r, q, 2, ctilde(r, q, 2), shown);
}

// Non-linear part of a univariate rational function in `var`: the residual
// of the numerator after removing rational roots.
inline UPoly nonlinear_part(const ParamScalar& x, const std::string& var) {
  URational f = reduce_univariate(x, symbol_id(var));
  return factor_linear(f.num).residual;
}

// Proportionality of the non-linear numerator part of c~ (in s = u+v) to that of
// S_{R/Q}{p_k = s + 2N + |Q|_R - 1}.
inline Report ctilde_observation_check(const Partition& r, const Partition& q, int n) {
  ParamScalar c = to_uv_sum(ctilde(r, q, n));
  const ParamScalar s = ParamScalar::symbol("s");
  ParamScalar shifted = s + ParamScalar(2 * n + restricted_size(r, q) - 1);
  ParamScalar skew = eval_all(skew_schur(r, q), shifted);
  UPoly lhs = nonlinear_part(c, "s"), rhs = nonlinear_part(skew, "s");
  Report rep = make_report("ctilde:skew-schur", "selberg-jacobi", r, q, n, ParamScalar(from_upoly(lhs, symbol_id("s"))),
                           ParamScalar(from_upoly(rhs, symbol_id("s"))), "skew at " + shifted.str());
  return rep;
}

// c~_{R,0} = S_R{delta_1} / xi_R(u+v+2N)
inline Report ctilde_empty_check(const Partition& r, int n) {
  const ParamScalar s = ParamScalar::symbol("u") + ParamScalar::symbol("v");
  ParamScalar rhs = ParamScalar(eval_delta(schur(r), 1)) / xi(r, s + ParamScalar(2 * n));
  return make_report("ctilde:empty", "selberg-jacobi", r, Partition{}, n, ctilde(r, Partition{}, n), rhs);
}

}  // namespace moplab

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "moplab/core/report.hpp"
#include "moplab/operators/ps_operator.hpp"
#include "moplab/operators/xspace.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

// x_i -> symbol "x<i+1>"
template <class F>
ParamScalar x_to_scalar(const XPoly<F>& f) {
  return f.template evaluate<ParamScalar>([](const F& c) { return ParamScalar(c); },
                                          [](int v) { return ParamScalar::symbol("x" + std::to_string(v + 1)); });
}

template <class F>
Report poly_report(std::string id, std::string model, Partition r, std::optional<Partition> q, int n, const XPoly<F>& lhs,
                   const XPoly<F>& rhs, std::string note = {}) {
  Report rep = make_report(std::move(id), std::move(model), std::move(r), std::move(q), n, x_to_scalar(lhs), x_to_scalar(rhs),
                           std::move(note));
  rep.equal = lhs == rhs;
  return rep;
}

// op(P) = e P with e read off from the leading term.
template <class F>
Report eigen_report(std::string id, std::string model, const Partition& r, int n, const XPoly<F>& p, const XPoly<F>& image,
                    const F& expected) {
  F e(0);
  if (!image.is_zero()) e = image.leading().second / p.leading().second;
  bool eigen = image == p.scaled(e);
  Report rep = make_report(std::move(id), std::move(model), r, std::nullopt, n, ParamScalar(e), ParamScalar(expected),
                           eigen ? "" : "not an eigenfunction");
  rep.equal = eigen && rep.equal;
  return rep;
}

// Applies both forms to S_R, |R| <= degree, l(R) <= N; stops at the first mismatch.
template <class F>
Report crosscheck_ps_vs_x(const std::string& name, const PSOperator<F>& op_ps,
                          const std::function<XPoly<F>(const XPoly<F>&, int)>& op_x, int n, int degree) {
  Report last = make_report("crosscheck:" + name, "operators", Partition{}, std::nullopt, n, ParamScalar(0), ParamScalar(0));
  int count = 0;
  for (auto& r : partitions_up_to(degree, n)) {
    auto s = schur(r);
    XPoly<F> lhs = sym_to_x<F>(apply_ps(op_ps, s), n);
    XPoly<F> rhs = op_x(sym_to_x<F>(s, n), n);
    ++count;
    if (lhs != rhs)
      return poly_report<F>("crosscheck:" + name, "operators", r, std::nullopt, n, lhs, rhs, "first mismatch");
  }
  last.lhs = last.rhs = ParamScalar(count);
  last.note = std::to_string(count) + " shapes";
  return last;
}

// ---- eigen-equations --------------------------------------------------

// (W2 - l0) H_R = -|R| H_R in the Calogero form.
template <class F>
Report hermite_eigencheck(const Partition& r, int n) {
  auto h = multivariate_x(hermite_family<F>(), r, n);
  return eigen_report<F>("eigen:hermite", "gaussian-hermite", r, n, h, calogero(h, n), F(-r.size()));
}

enum class JacobiOperator { XSpace, Printed, Derived };

inline std::string jacobi_operator_name(JacobiOperator op, W0Reading w) {
  std::string base = op == JacobiOperator::XSpace ? "x-space" : op == JacobiOperator::Printed ? "printed" : "derived";
  if (op == JacobiOperator::XSpace) return base;
  return base + (w == W0Reading::FirstDerivative ? "/W0-first" : "/W0-second");
}

// (u+v)|R| + 2 sum (N + j - i)
template <class F>
F jacobi_eigenvalue(const Partition& r, int n, const F& u, const F& v) {
  F acc = (u + v) * F(r.size());
  for (auto& c : contents(r)) acc = acc + F(2 * (n + c.value));
  return acc;
}

// Printed: W0 + (2+u+v) l0 + 2 F2 - (u+1) F1.  Derived: W0 + (u+v) l0 - F2 - u F1.
// The x-space operator is the negative of the derived one.
template <class F>
Report jacobi_eigencheck(const Partition& r, int n, const F& u, const F& v, JacobiOperator which,
                         W0Reading reading = W0Reading::FirstDerivative) {
  auto fam = jacobi_family(u, v);
  auto jx = multivariate_x(fam, r, n);
  F expected = jacobi_eigenvalue(r, n, u, v);
  std::string id = "eigen:jacobi:" + jacobi_operator_name(which, reading);
  if (which == JacobiOperator::XSpace)
    return eigen_report<F>(id, "selberg-jacobi", r, n, jx, jacobi_x(jx, n, u, v).scaled(F(-1)), expected);
  SymPoly<F> js;
  for (auto& [q, c] : multivariate(fam, r, n).coeffs) js = js + schur_as<F>(q).scaled(c);
  const F nn(n);
  auto w0 = jacobi_w0(nn, reading);
  SymPoly<F> image;
  if (which == JacobiOperator::Printed)
    image = apply_ps(w0, js) + apply_ps(l0(nn), js).scaled(F(2) + u + v) + apply_ps(jacobi_f2(nn), js).scaled(F(2)) -
            apply_ps(jacobi_f1(nn), js).scaled(u + F(1));
  else
    image = apply_ps(w0, js) + apply_ps(l0(nn), js).scaled(u + v) - apply_ps(jacobi_f2(nn), js) -
            apply_ps(jacobi_f1(nn), js).scaled(u);
  return eigen_report<F>(id, "selberg-jacobi", r, n, jx, sym_to_x<F>(image, n), expected);
}

// Phase-free MP difference equation; eigenvalue |R| (1 - u).
template <class F>
Report mp_eigencheck(const Partition& r, int n, const F& lambda, const F& u, bool printed_prefactor) {
  auto q = multivariate_x(mp_family(lambda, u), r, n);
  F pre = printed_prefactor ? F(n) : F(1);
  return eigen_report<F>(printed_prefactor ? "eigen:mp:prefactor-N" : "eigen:mp", "meixner-pollaczek", r, n, q,
                         mp_difference_x(q, n, lambda, u, pre), F(r.size()) * (F(1) - u));
}

// ---- Hermite table --------------------------------------------------------

template <class F>
XPoly<F> hermite_x(const Partition& r, int n) {
  return multivariate_x(hermite_family<F>(), r, n);
}

// p1 H_R = sum H_{R+box} + sum (N + c(box)) H_{R-box}; rows beyond N dropped.
template <class F>
Report pieri_check(const Partition& r, int n) {
  XPoly<F> p1;
  for (int i = 0; i < n; ++i) p1 = p1 + x_var<F>(i);
  XPoly<F> lhs = p1 * hermite_x<F>(r, n), rhs;
  for (int i : r.addable_rows())
    if (i <= n) rhs = rhs + hermite_x<F>(r.add_box(i), n);
  for (int i : r.removable_rows()) rhs = rhs + hermite_x<F>(r.remove_box(i), n).scaled(F(n + r.row(i) - i));
  return poly_report<F>("pieri", "gaussian-hermite", r, std::nullopt, n, lhs, rhs);
}

// sum_i d/dx_i H_R = sum (N + c(box)) H_{R-box}
template <class F>
Report differentiation_check(const Partition& r, int n) {
  XPoly<F> lhs = sum_partials(hermite_x<F>(r, n), n), rhs;
  for (int i : r.removable_rows()) rhs = rhs + hermite_x<F>(r.remove_box(i), n).scaled(F(n + r.row(i) - i));
  return poly_report<F>("differentiation", "gaussian-hermite", r, std::nullopt, n, lhs, rhs);
}

inline Partition staircase(int n, bool plus_one) {
  std::vector<int> parts;
  for (int k = n - (plus_one ? 0 : 1); k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

// H_[N-1,...,1] = sign prod_{i<j}(x_i + x_j); plus_one multiplies by prod x_i.
// printed_sign uses (-1)^{(N-2)(N+1)/2}, otherwise +1.
template <class F>
Report staircase_check(int n, bool plus_one, bool printed_sign) {
  Partition r = staircase(n, plus_one);
  XPoly<F> prod(F(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) prod = prod * (x_var<F>(i) + x_var<F>(j));
  if (plus_one)
    for (int i = 0; i < n; ++i) prod = prod * x_var<F>(i);
  const int e = (n - 2) * (n + 1) / 2;
  if (printed_sign && e % 2) prod = prod.scaled(F(-1));
  std::string id = std::string(plus_one ? "staircase+1" : "staircase") + (printed_sign ? ":printed-sign" : "");
  return poly_report<F>(id, "gaussian-hermite", r, std::nullopt, n, hermite_x<F>(r, n), prod);
}

// exp(scale W2) S_R against the determinant definition.
template <class F>
Report w_representation_check(const Partition& r, int n, const F& scale) {
  XPoly<F> lhs = sym_to_x<F>(exp_ps(w2(F(n)), scale, schur(r)), n);
  return poly_report<F>("w-representation", "gaussian-hermite", r, std::nullopt, n, lhs, hermite_x<F>(r, n),
                        "scale " + ParamScalar(scale).str());
}

}  // namespace moplab

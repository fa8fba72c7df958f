#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/detquotient/family.hpp"
#include "moplab/partitions/partition.hpp"

namespace moplab {

struct ShapeTooLong : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularNormalization : std::domain_error {
  using std::domain_error::domain_error;
};

template <class F>
struct MultiExpansion {
  Partition shape;
  int nvars = 0;
  std::map<Partition, F> coeffs;

  F at(const Partition& q) const {
    auto it = coeffs.find(q);
    return it == coeffs.end() ? F(0) : it->second;
  }
};

// lambda_j = R_j + N - j
inline std::vector<int> shifted_parts(const Partition& r, int n) {
  if (r.length() > n) throw ShapeTooLong(r.str() + " has more than " + std::to_string(n) + " rows");
  std::vector<int> lam;
  for (int j = 1; j <= n; ++j) lam.push_back(r.row(j) + n - j);
  return lam;
}

// Partitions Q contained in R with at most n rows.
inline std::vector<Partition> subshapes(const Partition& r, int n) {
  std::vector<Partition> out;
  for (auto& q : subpartitions(r))
    if (q.length() <= n) out.push_back(q);
  return out;
}

namespace detail {
template <class F, class Entry>
F minor_det(const std::vector<int>& lam, const std::vector<int>& mu, Entry&& entry) {
  const size_t n = lam.size();
  Matrix<F> m(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) m(j, k) = entry(lam[j], mu[k]);
  return determinant(m);
}
}  // namespace detail

// P_R = sum_Q C_RQ Theta_Q with C_RQ = det c(lambda_j, mu_k).
template <class F>
MultiExpansion<F> multivariate(const Family<F>& fam, const Partition& r, int n) {
  auto lam = shifted_parts(r, n);
  MultiExpansion<F> out{r, n, {}};
  for (auto& q : subshapes(r, n)) {
    auto mu = shifted_parts(q, n);
    F c = detail::minor_det<F>(lam, mu, [&](int a, int b) { return fam.coeff(a, b); });
    if (!c.is_zero()) out.coeffs.emplace(q, std::move(c));
  }
  return out;
}

// Theta_R = sum_Q Cv_RQ P_Q from the inverse single-variable matrix.
template <class F>
MultiExpansion<F> inverse_expansion(const Family<F>& fam, const Partition& r, int n) {
  auto lam = shifted_parts(r, n);
  const int size = lam.empty() ? 1 : lam[0] + 1;
  Matrix<F> inv = fam.inverse_coeff_matrix(size);
  MultiExpansion<F> out{r, n, {}};
  for (auto& q : subshapes(r, n)) {
    auto mu = shifted_parts(q, n);
    F c = detail::minor_det<F>(lam, mu, [&](int a, int b) {
      return b <= a ? inv(static_cast<size_t>(a), static_cast<size_t>(b)) : F(0);
    });
    if (!c.is_zero()) out.coeffs.emplace(q, std::move(c));
  }
  return out;
}

// Theta_emptyset is the constant prod_j lead(phi_{N-j}).
template <class F>
F theta_empty(const Family<F>& fam, int n) {
  F r(1);
  for (int j = 1; j <= n; ++j) r = r * fam.phi_lead(n - j);
  return r;
}

// <Theta_R> under prod mu(t_i) Delta(t)^2, normalized so that <1> = 1:
// det L(phi_{lambda_j} t^{N-k}) / det L(t^{N-j} t^{N-k}).
template <class F>
F andreief_expectation(const Family<F>& fam, const Partition& r, int n) {
  auto lam = shifted_parts(r, n);
  auto lam0 = shifted_parts(Partition{}, n);
  std::vector<int> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(n - k);
  if (fam.has_step()) {
    // factor L(phi_{lambda_j}) out of each row; ratios come from step()
    F num = detail::minor_det<F>(lam, cols, [&](int a, int m) { return fam.scaled_moment_times(a, m); });
    F den = detail::minor_det<F>(lam0, cols, [&](int a, int m) { return fam.scaled_moment_times(a, m); });
    if (den.is_zero()) throw SingularNormalization("singular normalization determinant");
    F ratio(1);
    for (size_t j = 0; j < lam.size(); ++j)
      for (int i = lam0[j]; i < lam[j]; ++i) ratio = ratio * fam.step(i);
    return theta_empty(fam, n) * ratio * num / den;
  }
  F num = detail::minor_det<F>(lam, cols, [&](int a, int m) { return fam.moment_times(a, m); });
  F den = detail::minor_det<F>(cols, cols, [&](int a, int m) { return fam.monomial_moment(a + m); });
  if (den.is_zero()) throw SingularNormalization("singular normalization determinant");
  return num / den;
}

// det L(f_{lambda_j} g_{mu_k}) / det L(t^{N-j} t^{N-k}) for arbitrary row
// and column polynomial generators sharing the moment functional of fam.
template <class F, class RowPoly, class ColPoly>
F andreief_pairing(const Family<F>& fam, const std::vector<int>& lam, const std::vector<int>& mu, RowPoly&& f, ColPoly&& g) {
  const int n = static_cast<int>(lam.size());
  std::vector<int> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(n - k);
  F den = detail::minor_det<F>(cols, cols, [&](int a, int m) { return fam.monomial_moment(a + m); });
  if (den.is_zero()) throw SingularNormalization("singular normalization determinant");
  F num = detail::minor_det<F>(lam, mu, [&](int a, int b) { return fam.apply_moment(f(a) * g(b)); });
  return num / den;
}

// <Theta^F_R P^G_Q>; both families must share the base variable and moments.
template <class F>
F andreief_bilinear(const Family<F>& f, const Family<F>& g, const Partition& r, const Partition& q, int n) {
  if (f.base() != g.base()) throw std::invalid_argument("andreief_bilinear: base variables differ");
  return andreief_pairing(
      f, shifted_parts(r, n), shifted_parts(q, n), [&](int a) { return f.phi_poly(a); }, [&](int b) { return g.p_poly(b); });
}

// <P_R P_Q>
template <class F>
F andreief_gram(const Family<F>& f, const Partition& r, const Partition& q, int n) {
  return andreief_pairing(
      f, shifted_parts(r, n), shifted_parts(q, n), [&](int a) { return f.p_poly(a); }, [&](int b) { return f.p_poly(b); });
}

}  // namespace moplab

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moplab/core/field.hpp"
#include "moplab/core/matrix.hpp"

namespace moplab {

enum class BaseKind { X, XSquared };

// Dense polynomial in the base variable t, coefficients low to high.
template <class F>
struct TPoly {
  std::vector<F> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  F at(size_t k) const { return k < c.size() ? c[k] : F(0); }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    TPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), F(0));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] = a.c[i] + b.c[i];
    return a;
  }
  friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + b.scaled(F(-1)); }
  TPoly scaled(const F& s) const {
    TPoly r = *this;
    for (auto& x : r.c) x = x * s;
    return r;
  }
};

// Graded family P_n = sum_m c(n,m) phi_m over a Newton base
// phi_{n+1} = phi_n (lead(n) t + node(n)), with normalized moments
// L(phi_n) (L(phi_0) = 1). step(n) = L(phi_{n+1}) / L(phi_n) when the
// moments are hypergeometric.
template <class F>
class Family {
 public:
  struct Spec {
    std::string name;
    BaseKind base = BaseKind::X;
    std::function<F(int, int)> coeff;
    std::function<F(int)> lead;
    std::function<F(int)> node;
    std::function<F(int)> moment;
    std::function<F(int)> step;  // optional
    bool monic = true;
  };

  explicit Family(Spec s) : spec_(std::move(s)), cache_(std::make_shared<Cache>()) {}

  const std::string& name() const { return spec_.name; }
  BaseKind base() const { return spec_.base; }
  bool monic() const { return spec_.monic; }
  bool has_step() const { return static_cast<bool>(spec_.step); }

  F coeff(int n, int m) const {
    if (m > n || m < 0) return F(0);
    return memo(cache_->coeff, {n, m}, [&] { return spec_.coeff(n, m); });
  }
  F lead(int n) const { return memo(cache_->lead, {n, 0}, [&] { return spec_.lead(n); }); }
  F node(int n) const { return memo(cache_->node, {n, 0}, [&] { return spec_.node(n); }); }
  F step(int n) const { return memo(cache_->step, {n, 0}, [&] { return spec_.step(n); }); }
  F moment(int n) const {
    return memo(cache_->moment, {n, 0}, [&] {
      if (n == 0) return F(1);
      if (spec_.moment) return spec_.moment(n);
      return moment(n - 1) * step(n - 1);
    });
  }

  // Leading coefficient of phi_n in t.
  F phi_lead(int n) const {
    F r(1);
    for (int k = 0; k < n; ++k) r = r * lead(k);
    return r;
  }

  // t^m phi_n = sum_i e[i] phi_{n+i}, i = 0..m.
  std::vector<F> times_t_power(int n, int m) const {
    return memo_vec(cache_->tpow, {n, m}, [&] {
      std::vector<F> e{F(1)};
      for (int s = 0; s < m; ++s) {
        std::vector<F> next(e.size() + 1, F(0));
        for (size_t i = 0; i < e.size(); ++i) {
          if (e[i].is_zero()) continue;
          int k = n + static_cast<int>(i);
          F inv = F(1) / lead(k);
          next[i + 1] = next[i + 1] + e[i] * inv;
          next[i] = next[i] - e[i] * node(k) * inv;
        }
        e = std::move(next);
      }
      return e;
    });
  }

  // L(phi_n t^m)
  F moment_times(int n, int m) const {
    auto e = times_t_power(n, m);
    F acc(0);
    for (size_t i = 0; i < e.size(); ++i)
      if (!e[i].is_zero()) acc = acc + e[i] * moment(n + static_cast<int>(i));
    return acc;
  }
  // L(phi_n t^m) / L(phi_n), using step ratios
  F scaled_moment_times(int n, int m) const {
    auto e = times_t_power(n, m);
    F acc(0), ratio(1);
    for (size_t i = 0; i < e.size(); ++i) {
      if (i > 0) ratio = ratio * step(n + static_cast<int>(i) - 1);
      if (!e[i].is_zero()) acc = acc + e[i] * ratio;
    }
    return acc;
  }
  F monomial_moment(int m) const { return moment_times(0, m); }

  TPoly<F> phi_poly(int n) const {
    return memo_poly(cache_->phi, n, [&] {
      if (n == 0) return TPoly<F>{{F(1)}};
      return phi_poly(n - 1) * TPoly<F>{{node(n - 1), lead(n - 1)}};
    });
  }
  TPoly<F> p_poly(int n) const {
    return memo_poly(cache_->pp, n, [&] {
      TPoly<F> r;
      for (int m = 0; m <= n; ++m) {
        F c = coeff(n, m);
        if (!c.is_zero()) r = r + phi_poly(m).scaled(c);
      }
      return r;
    });
  }
  // L applied to a polynomial in t
  F apply_moment(const TPoly<F>& p) const {
    F acc(0);
    for (size_t k = 0; k < p.c.size(); ++k)
      if (!p.c[k].is_zero()) acc = acc + p.c[k] * monomial_moment(static_cast<int>(k));
    return acc;
  }

  // Lower-triangular coefficient matrix c(n,m), n,m < size, and its inverse.
  Matrix<F> coeff_matrix(int size) const {
    Matrix<F> m(static_cast<size_t>(size), static_cast<size_t>(size));
    for (int n = 0; n < size; ++n)
      for (int k = 0; k <= n; ++k) m(static_cast<size_t>(n), static_cast<size_t>(k)) = coeff(n, k);
    return m;
  }
  Matrix<F> inverse_coeff_matrix(int size) const {
    std::lock_guard lock(cache_->mu_inv);
    auto& inv = cache_->inverse;
    if (static_cast<int>(inv.rows()) < size) inv = lower_triangular_inverse(coeff_matrix(size));
    Matrix<F> out(static_cast<size_t>(size), static_cast<size_t>(size));
    for (size_t i = 0; i < static_cast<size_t>(size); ++i)
      for (size_t j = 0; j <= i; ++j) out(i, j) = inv(i, j);
    return out;
  }

 private:
  struct Cache {
    std::mutex mu, mu_inv;
    std::map<std::pair<int, int>, F> coeff, lead, node, step, moment;
    std::map<std::pair<int, int>, std::vector<F>> tpow;
    std::map<int, TPoly<F>> phi, pp;
    Matrix<F> inverse;
  };

  template <class Fn>
  F memo(std::map<std::pair<int, int>, F>& m, std::pair<int, int> key, Fn&& fn) const {
    {
      std::lock_guard lock(cache_->mu);
      auto it = m.find(key);
      if (it != m.end()) return it->second;
    }
    F v = fn();
    std::lock_guard lock(cache_->mu);
    return m.emplace(key, std::move(v)).first->second;
  }
  template <class Fn>
  std::vector<F> memo_vec(std::map<std::pair<int, int>, std::vector<F>>& m, std::pair<int, int> key, Fn&& fn) const {
    {
      std::lock_guard lock(cache_->mu);
      auto it = m.find(key);
      if (it != m.end()) return it->second;
    }
    auto v = fn();
    std::lock_guard lock(cache_->mu);
    return m.emplace(key, std::move(v)).first->second;
  }
  template <class Fn>
  TPoly<F> memo_poly(std::map<int, TPoly<F>>& m, int key, Fn&& fn) const {
    {
      std::lock_guard lock(cache_->mu);
      auto it = m.find(key);
      if (it != m.end()) return it->second;
    }
    auto v = fn();
    std::lock_guard lock(cache_->mu);
    return m.emplace(key, std::move(v)).first->second;
  }

  Spec spec_;
  std::shared_ptr<Cache> cache_;
};

// Monomial base: lead 1, node 0.
template <class F>
typename Family<F>::Spec monomial_base_spec(std::string name, std::function<F(int)> moment) {
  typename Family<F>::Spec s;
  s.name = std::move(name);
  s.coeff = [](int n, int m) { return n == m ? F(1) : F(0); };
  s.lead = [](int) { return F(1); };
  s.node = [](int) { return F(0); };
  s.moment = std::move(moment);
  return s;
}

}  // namespace moplab

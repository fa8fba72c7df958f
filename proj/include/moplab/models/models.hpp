#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/detquotient/family.hpp"
#include "moplab/partitions/partition.hpp"

namespace moplab {

enum class ModelKind { GaussianHermite, SelbergJacobi, MeixnerPollaczek, Wilson };

inline std::string model_name(ModelKind k) {
  switch (k) {
    case ModelKind::GaussianHermite: return "gaussian-hermite";
    case ModelKind::SelbergJacobi: return "selberg-jacobi";
    case ModelKind::MeixnerPollaczek: return "meixner-pollaczek";
    case ModelKind::Wilson: return "wilson";
  }
  return "?";
}

inline std::vector<std::string> model_parameters(ModelKind k) {
  switch (k) {
    case ModelKind::GaussianHermite: return {};
    case ModelKind::SelbergJacobi: return {"u", "v"};
    case ModelKind::MeixnerPollaczek: return {"lambda", "u"};
    case ModelKind::Wilson: return {"a", "b", "c", "d"};
  }
  return {};
}

template <class F>
struct ModelId {
  ModelKind kind = ModelKind::GaussianHermite;
  std::map<std::string, F> params;

  const F& operator[](const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument(model_name(kind) + ": missing parameter " + name);
    return it->second;
  }
};

// Symbolic parameters named after the model's formal parameters.
inline ModelId<ParamScalar> symbolic_model(ModelKind k) {
  ModelId<ParamScalar> m{k, {}};
  for (auto& p : model_parameters(k)) m.params.emplace(p, ParamScalar::symbol(p));
  return m;
}

template <class F>
F binomial_f(int n, int k) {
  return F(binomial(n, k));
}

// ---- single-variable coefficients -------------------------------------

// c_{n,m}: coefficient of x^m in H_n (probabilists' convention).
template <class F>
F hermite_coeff(int n, int m) {
  if (m > n || m < 0 || (n - m) % 2) return F(0);
  int k = (n - m) / 2;
  Rational c = factorial(n) / (factorial(k) * factorial(m));
  if (k % 2) c = -c;
  for (int t = 0; t < k; ++t) c = c / Rational(2);
  return F(c);
}

// (-1)^{n-m} C(n,m) (1+u+m)_{n-m} / (1+u+v+m+n)_{n-m}
template <class F>
F jacobi_coeff(int n, int m, const F& u, const F& v) {
  if (m > n || m < 0) return F(0);
  return sign_pow<F>(n - m) * binomial_f<F>(n, m) * pochhammer(F(1) + u + F(m), n - m) /
         pochhammer(F(1) + u + v + F(m + n), n - m);
}

// Coefficient of theta_m = (lambda + i x)_m in the phase-free MP polynomial
// e^{-i n phi} q_n: (2 lambda + m)_{n-m} (-1)^m C(n,m) (1-u)^m / n!.
template <class F>
F mp_coeff(int n, int m, const F& lambda, const F& u) {
  if (m > n || m < 0) return F(0);
  return pochhammer(F(2) * lambda + F(m), n - m) * sign_pow<F>(m) * binomial_f<F>(n, m) * ipow(factored(F(1) - u), m) /
         F(factorial(n));
}

// Coefficient of theta_m(x|a) in W_n, or in W_n / (z+n-1)_n when normalized.
template <class F>
F wilson_coeff(int n, int m, const F& a, const F& b, const F& c, const F& d, bool normalized) {
  if (m > n || m < 0) return F(0);
  F z = a + b + c + d;
  F r = pochhammer(a + b + F(m), n - m) * pochhammer(a + c + F(m), n - m) * pochhammer(a + d + F(m), n - m) *
        sign_pow<F>(m) * binomial_f<F>(n, m) * pochhammer(z + F(n - 1), m);
  if (normalized) r = r / pochhammer(z + F(n - 1), n);
  return r;
}

// ---- families -------------------------------------------------------------

template <class F>
F gaussian_moment(int n) {
  if (n % 2) return F(0);
  Rational r(1);
  for (int k = n - 1; k > 0; k -= 2) r *= Rational(k);
  return F(r);
}

// Monomial base with Gaussian moments: Theta_R = S_R.
template <class F>
Family<F> gaussian_monomial_family() {
  return Family<F>(monomial_base_spec<F>("gaussian-monomial", [](int n) { return gaussian_moment<F>(n); }));
}

template <class F>
Family<F> hermite_family() {
  auto s = monomial_base_spec<F>("hermite", [](int n) { return gaussian_moment<F>(n); });
  s.coeff = [](int n, int m) { return hermite_coeff<F>(n, m); };
  return Family<F>(s);
}

template <class F>
Family<F> beta_monomial_family(const F& u, const F& v) {
  auto s = monomial_base_spec<F>("beta-monomial", {});
  s.moment = nullptr;
  s.step = [u, v](int n) { return factored(u + F(1 + n)) / factored(u + v + F(2 + n)); };
  return Family<F>(s);
}

template <class F>
Family<F> jacobi_family(const F& u, const F& v) {
  auto s = monomial_base_spec<F>("jacobi", {});
  s.moment = nullptr;
  s.step = [u, v](int n) { return factored(u + F(1 + n)) / factored(u + v + F(2 + n)); };
  s.coeff = [u, v](int n, int m) { return jacobi_coeff<F>(n, m, u, v); };
  return Family<F>(s);
}

// Newton base theta_{n+1} = theta_n (i t + lambda + n); L(theta_n) = (2 lambda)_n / (1-u)^n.
template <class F>
typename Family<F>::Spec mp_base_spec(const F& lambda, const F& u) {
  typename Family<F>::Spec s;
  s.name = "mp-theta";
  s.coeff = [](int n, int m) { return n == m ? F(1) : F(0); };
  s.lead = [](int) { return F::i(); };
  s.node = [lambda](int n) { return lambda + F(n); };
  s.step = [lambda, u](int n) { return factored(F(2) * lambda + F(n)) / factored(F(1) - u); };
  return s;
}

template <class F>
Family<F> mp_theta_family(const F& lambda, const F& u) {
  return Family<F>(mp_base_spec(lambda, u));
}

template <class F>
Family<F> mp_family(const F& lambda, const F& u) {
  auto s = mp_base_spec(lambda, u);
  s.name = "meixner-pollaczek";
  s.coeff = [lambda, u](int n, int m) { return mp_coeff<F>(n, m, lambda, u); };
  s.monic = false;
  return Family<F>(s);
}

// Base variable t = x^2: theta_{n+1} = theta_n (t + (a+n)^2).
template <class F>
typename Family<F>::Spec wilson_base_spec(const F& a, const F& b, const F& c, const F& d) {
  typename Family<F>::Spec s;
  s.name = "wilson-theta";
  s.base = BaseKind::XSquared;
  s.coeff = [](int n, int m) { return n == m ? F(1) : F(0); };
  s.lead = [](int) { return F(1); };
  s.node = [a](int n) { return (a + F(n)) * (a + F(n)); };
  F z = a + b + c + d;
  s.step = [a, b, c, d, z](int n) {
    return factored(a + b + F(n)) * factored(a + c + F(n)) * factored(a + d + F(n)) / factored(z + F(n));
  };
  return s;
}

template <class F>
Family<F> wilson_theta_family(const F& a, const F& b, const F& c, const F& d) {
  return Family<F>(wilson_base_spec(a, b, c, d));
}

template <class F>
Family<F> wilson_family(const F& a, const F& b, const F& c, const F& d, bool normalized = true) {
  auto s = wilson_base_spec(a, b, c, d);
  s.name = normalized ? "wilson-normalized" : "wilson";
  s.coeff = [a, b, c, d, normalized](int n, int m) { return wilson_coeff<F>(n, m, a, b, c, d, normalized); };
  s.monic = false;
  return Family<F>(s);
}

// Base family (Theta) and orthogonal family of a model.
template <class F>
Family<F> base_family(const ModelId<F>& m) {
  switch (m.kind) {
    case ModelKind::GaussianHermite: return gaussian_monomial_family<F>();
    case ModelKind::SelbergJacobi: return beta_monomial_family(m["u"], m["v"]);
    case ModelKind::MeixnerPollaczek: return mp_theta_family(m["lambda"], m["u"]);
    case ModelKind::Wilson: return wilson_theta_family(m["a"], m["b"], m["c"], m["d"]);
  }
  throw std::logic_error("unknown model");
}

template <class F>
Family<F> orthogonal_family(const ModelId<F>& m) {
  switch (m.kind) {
    case ModelKind::GaussianHermite: return hermite_family<F>();
    case ModelKind::SelbergJacobi: return jacobi_family(m["u"], m["v"]);
    case ModelKind::MeixnerPollaczek: return mp_family(m["lambda"], m["u"]);
    case ModelKind::Wilson: return wilson_family(m["a"], m["b"], m["c"], m["d"], true);
  }
  throw std::logic_error("unknown model");
}

// L(phi_n) of the model's base.
template <class F>
F base_moment(const ModelId<F>& m, int n) {
  return base_family(m).moment(n);
}

}  // namespace moplab

#pragma once

#include <concepts>
#include <stdexcept>

#include "moplab/core/param_scalar.hpp"
#include "moplab/core/rational.hpp"

namespace moplab {

// Exact scalar fields used throughout: GaussianRational (specialized runs)
// and ParamScalar (symbolic runs).
template <class F>
concept ExactField = requires(F a, F b, Rational q) {
  F(1);
  F(q);
  F::i();
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

template <class F>
F factored(const F& x) {
  return x;
}
inline ParamScalar factored(const ParamScalar& x) { return x.atomized(); }

template <class F>
F ipow(const F& x, int k) {
  if (k < 0) return F(1) / ipow(x, -k);
  F r(1);
  for (int j = 0; j < k; ++j) r = r * x;
  return r;
}
inline ParamScalar ipow(const ParamScalar& x, int k) { return x.pow(k); }

// (-1)^k
template <ExactField F>
F sign_pow(long long k) {
  return (k % 2 == 0) ? F(1) : F(-1);
}

// i^k for integer k
template <ExactField F>
F i_pow(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return F(1);
    case 1: return F::i();
    case 2: return F(-1);
    default: return -F::i();
  }
}

// Ascending Pochhammer (x)_n = x(x+1)...(x+n-1); each factor is kept factored.
template <ExactField F>
F pochhammer(const F& x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative index");
  F r(1);
  for (int k = 0; k < n; ++k) r = r * factored(x + F(k));
  return r;
}

// Extension to negative index: (x)_{-k} = 1/((x-1)(x-2)...(x-k)).
template <ExactField F>
F pochhammer_signed(const F& x, int n) {
  if (n >= 0) return pochhammer(x, n);
  F d(1);
  for (int k = 1; k <= -n; ++k) d = d * factored(x - F(k));
  return F(1) / d;
}

}  // namespace moplab

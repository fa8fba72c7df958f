#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moplab/core/param_scalar.hpp"

namespace moplab {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(Rational r) { return UPoly({std::move(r)}); }
  static UPoly linear(Rational c0, Rational c1) { return UPoly({std::move(c0), std::move(c1)}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

  UPoly scaled(const Rational& s) const {
    UPoly r = *this;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
  }
  UPoly monic() const { return is_zero() ? *this : scaled(Rational(1) / lead()); }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  // quotient and remainder
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    UPoly r = *this;
    if (r.degree() < d.degree()) return {UPoly{}, r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rational t = r.lead() / d.lead();
      int k = r.degree() - d.degree();
      q[static_cast<size_t>(k)] = t;
      for (int i = 0; i <= d.degree(); ++i) r.c[static_cast<size_t>(i + k)] -= t * d.c[static_cast<size_t>(i)];
      r.trim();
    }
    return {UPoly(std::move(q)), r};
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      bool neg = c[i].sign() < 0;
      Rational a = neg ? -c[i] : c[i];
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string body = mono.empty() ? a.str() : (a.is_one() ? mono : a.str() + "*" + mono);
      if (out.empty()) out = (neg ? "-" : "") + body;
      else out += (neg ? "-" : "+") + body;
    }
    return out;
  }
};

inline UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Converts a polynomial in a single parameter with rational coefficients.
inline UPoly to_upoly(const ParamPoly& p, int var) {
  std::vector<Rational> c(static_cast<size_t>(p.degree_in(var) + 1), Rational(0));
  for (auto& [m, k] : p.terms()) {
    for (int v = 0; v < kMaxVars; ++v)
      if (v != var && m.e[static_cast<size_t>(v)])
        throw std::invalid_argument("to_upoly: polynomial involves " + symbol_name(v));
    if (!k.is_real()) throw std::invalid_argument("to_upoly: non-real coefficient");
    c[m.e[static_cast<size_t>(var)]] = k.re();
  }
  return UPoly(std::move(c));
}

inline ParamPoly from_upoly(const UPoly& u, int var) {
  std::vector<ParamPoly::Term> terms;
  for (size_t i = u.c.size(); i-- > 0;)
    if (!u.c[i].is_zero()) terms.emplace_back(Monomial::var(var, static_cast<int>(i)), GaussianRational(u.c[i]));
  return ParamPoly::from_sorted(std::move(terms));
}

// Reduced univariate rational function num/den with monic den.
struct URational {
  UPoly num, den;
};

inline URational reduce_univariate(const ParamScalar& x, int var) {
  UPoly n = to_upoly(x.numerator(), var);
  UPoly d = to_upoly(x.denominator(), var);
  UPoly g = upoly_gcd(n, d);
  if (!n.is_zero()) {
    n = n.divmod(g).first;
    d = d.divmod(g).first;
  } else {
    d = UPoly::constant(Rational(1));
  }
  Rational s = d.lead();
  return {n.scaled(Rational(1) / s), d.scaled(Rational(1) / s)};
}

namespace detail {
inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> pf;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (p > 2000000) return {};  // give up on large cofactors
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) pf.emplace_back(p, e);
  }
  if (m > 1) pf.emplace_back(m, 1);
  std::vector<mpz_class> out{1};
  for (auto& [p, e] : pf) {
    size_t k = out.size();
    mpz_class pw = 1;
    for (int j = 1; j <= e; ++j) {
      pw *= p;
      for (size_t i = 0; i < k; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}
}  // namespace detail

// Factorization over Q into linear factors (x - root)^mult times an
// irreducible-over-linear residual; constant carries the leading coefficient.
struct LinearFactorization {
  Rational constant{1};
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), ascending
  UPoly residual;                                // monic, no rational roots (or 1)
};

inline LinearFactorization factor_linear(const UPoly& p) {
  LinearFactorization f;
  if (p.is_zero()) {
    f.constant = Rational(0);
    return f;
  }
  f.constant = p.lead();
  UPoly q = p.monic();
  std::map<Rational, int> found;
  // zero roots
  while (q.degree() > 0 && q.c[0].is_zero()) {
    q = q.divmod(UPoly::linear(Rational(0), Rational(1))).first;
    found[Rational(0)]++;
  }
  bool progress = true;
  while (q.degree() > 0 && progress) {
    progress = false;
    // primitive integer form
    mpz_class l = 1;
    for (auto& x : q.c) l = lcm(l, x.denominator());
    mpz_class a0 = mpq_class(q.c.front().to_mpq() * l).get_num();
    mpz_class an = mpq_class(q.c.back().to_mpq() * l).get_num();
    auto dp = detail::divisors(a0);
    auto dq = detail::divisors(an);
    for (auto& pp : dp) {
      for (auto& qq : dq) {
        for (int sgn : {1, -1}) {
          mpq_class cand(sgn * pp, qq);
          cand.canonicalize();
          Rational r(cand);
          if (q.eval(r).is_zero()) {
            q = q.divmod(UPoly::linear(-r, Rational(1))).first;
            found[r]++;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  for (auto& [r, m] : found) f.roots.emplace_back(r, m);
  f.residual = q;
  return f;
}

// "(z+2)(z+6)" style rendering of the monic part of a factorization.
inline std::string linear_factors_str(const LinearFactorization& f, const std::string& var) {
  std::string out;
  for (auto it = f.roots.rbegin(); it != f.roots.rend(); ++it) {
    const auto& [r, m] = *it;
    std::string s;
    if (r.is_zero()) s = var;
    else if (r.sign() < 0) s = "(" + var + "+" + (-r).str() + ")";
    else s = "(" + var + "-" + r.str() + ")";
    if (m > 1) s += "^" + std::to_string(m);
    out += s;
  }
  if (f.residual.degree() > 0) out += "(" + f.residual.str(var) + ")";
  return out;
}

}  // namespace moplab

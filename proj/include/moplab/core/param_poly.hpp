#pragma once

#include <string>

#include "moplab/core/rational.hpp"
#include "moplab/core/sparse_poly.hpp"
#include "moplab/core/symbols.hpp"

namespace moplab {

using ParamPoly = SparsePoly<GaussianRational>;

inline ParamPoly param_var(const std::string& name) { return ParamPoly::var(symbol_id(name)); }

inline std::string monomial_str(const Monomial& m) {
  std::string s;
  for (int v = 0; v < kMaxVars; ++v) {
    int k = m.e[static_cast<size_t>(v)];
    if (!k) continue;
    if (!s.empty()) s += "*";
    s += symbol_name(v);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

// Canonical text: terms in descending lex order, explicit signs, "*" between factors.
inline std::string poly_str(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.is_real() && c.re().sign() < 0;
    GaussianRational a = neg ? -c : c;
    std::string ms = monomial_str(m);
    std::string body;
    if (ms.empty()) body = a.str();
    else if (a.is_one()) body = ms;
    else body = a.str() + "*" + ms;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? "-" : "+") + body;
    first = false;
  }
  return out;
}

}  // namespace moplab

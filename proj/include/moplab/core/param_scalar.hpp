#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moplab/core/param_poly.hpp"

namespace moplab {

struct DenominatorVanished : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnknownParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rational function in the formal parameters, stored as poly * prod(atom^e)
// with monic non-constant atoms and nonzero integer exponents. Negative
// exponents form the denominator. Fractions are not GCD-reduced; equality is
// decided by cross-multiplication (a - b has zero numerator).
class ParamScalar {
 public:
  using Atom = std::pair<ParamPoly, int>;

  ParamScalar() = default;
  ParamScalar(int v) : poly_(GaussianRational(v)) {}              // NOLINT(google-explicit-constructor)
  ParamScalar(long long v) : poly_(GaussianRational(v)) {}        // NOLINT(google-explicit-constructor)
  ParamScalar(Rational v) : poly_(GaussianRational(std::move(v))) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(GaussianRational v) : poly_(std::move(v)) {}        // NOLINT(google-explicit-constructor)
  ParamScalar(ParamPoly p) : poly_(std::move(p)) {}               // NOLINT(google-explicit-constructor)

  static ParamScalar symbol(const std::string& name) { return ParamScalar(param_var(name)); }
  static ParamScalar i() { return ParamScalar(GaussianRational::i()); }
  static ParamScalar from_parts(ParamPoly poly, std::vector<Atom> atoms) {
    ParamScalar r;
    r.poly_ = std::move(poly);
    if (r.poly_.is_zero()) return r;
    r.atoms_ = std::move(atoms);
    r.canonicalize_atoms();
    r.reduce();
    return r;
  }
  // num / den with no attempt at factoring den beyond content/monomials.
  static ParamScalar fraction(const ParamPoly& num, const ParamPoly& den) {
    return ParamScalar(num) / ParamScalar(den);
  }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_constant() const { return atoms_.empty() && poly_.is_constant(); }
  bool is_one() const { return atoms_.empty() && poly_.is_constant() && poly_.constant_value().is_one(); }
  GaussianRational constant_value() const {
    if (!is_constant()) throw std::logic_error("ParamScalar: not a constant");
    return poly_.constant_value();
  }
  const ParamPoly& poly() const { return poly_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // Expanded numerator and denominator polynomials.
  ParamPoly numerator() const {
    ParamPoly n = poly_;
    for (auto& [f, e] : atoms_)
      if (e > 0) n = n * f.pow(e);
    return n;
  }
  ParamPoly denominator() const {
    ParamPoly d(GaussianRational(1));
    for (auto& [f, e] : atoms_)
      if (e < 0) d = d * f.pow(-e);
    return d;
  }

  std::vector<int> variables() const {
    std::vector<bool> used(kMaxVars, false);
    for (int v : poly_.variables()) used[static_cast<size_t>(v)] = true;
    for (auto& [f, e] : atoms_)
      for (int v : f.variables()) used[static_cast<size_t>(v)] = true;
    std::vector<int> out;
    for (int v = 0; v < kMaxVars; ++v)
      if (used[static_cast<size_t>(v)]) out.push_back(v);
    return out;
  }

  // Moves the polynomial part into atoms (constant * monomial content * rest).
  ParamScalar atomized() const {
    if (is_zero() || poly_.is_constant()) return *this;
    auto [c, parts] = atomize(poly_);
    std::vector<Atom> atoms = atoms_;
    for (auto& a : parts) atoms.push_back(std::move(a));
    ParamScalar r;
    r.poly_ = ParamPoly(c);
    r.atoms_ = std::move(atoms);
    r.canonicalize_atoms();
    return r;
  }

  ParamScalar operator-() const {
    ParamScalar r = *this;
    r.poly_ = -r.poly_;
    return r;
  }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) { return add(a, b, false); }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return add(a, b, true); }

  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ParamScalar r;
    r.poly_ = a.poly_ * b.poly_;
    r.atoms_ = merge_atoms(a.atoms_, b.atoms_, 1);
    r.reduce();
    return r;
  }

  ParamScalar inverse() const {
    if (is_zero()) throw DenominatorVanished("ParamScalar: inverse of zero");
    ParamScalar r;
    std::vector<Atom> neg;
    for (auto& [f, e] : atoms_) neg.emplace_back(f, -e);
    if (poly_.is_constant()) {
      r.poly_ = ParamPoly(GaussianRational(1) / poly_.constant_value());
    } else {
      auto [c, parts] = atomize(poly_);
      r.poly_ = ParamPoly(GaussianRational(1) / c);
      for (auto& [f, e] : parts) neg.emplace_back(f, -e);
    }
    r.atoms_ = std::move(neg);
    r.canonicalize_atoms();
    return r;
  }

  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

  ParamScalar pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return ParamScalar(1);
    if (poly_.is_constant()) {
      ParamScalar r;
      GaussianRational c(1);
      for (int j = 0; j < k; ++j) c = c * poly_.constant_value();
      r.poly_ = ParamPoly(c);
      for (auto& [f, e] : atoms_) r.atoms_.emplace_back(f, e * k);
      return r;
    }
    ParamScalar r(1), b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  // Structural identity (fast path); semantic equality is operator==.
  bool same_repr(const ParamScalar& o) const { return poly_ == o.poly_ && atoms_ == o.atoms_; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.same_repr(b)) return true;
    return (a - b).is_zero();
  }

  // Evaluate into a ring T. conv maps GaussianRational -> T, value maps a
  // symbol id -> T; inv inverts a T (throws if not invertible).
  template <class T, class Conv, class Value, class Inv>
  T evaluate(Conv&& conv, Value&& value, Inv&& inv) const {
    T r = poly_.template evaluate<T>(conv, value);
    for (auto& [f, e] : atoms_) {
      T x = f.template evaluate<T>(conv, value);
      if (e < 0) x = inv(x);
      int k = e < 0 ? -e : e;
      T p = x;
      for (int j = 1; j < k; ++j) p = p * x;
      r = r * p;
    }
    return r;
  }

  // Exact evaluation at rational/Gaussian points.
  GaussianRational specialize(const std::map<int, GaussianRational>& at) const {
    auto conv = [](const GaussianRational& c) { return c; };
    auto value = [&](int v) -> GaussianRational {
      auto it = at.find(v);
      if (it == at.end()) throw UnknownParameter("unassigned parameter: " + symbol_name(v));
      return it->second;
    };
    auto inv = [](const GaussianRational& x) -> GaussianRational {
      if (x.is_zero()) throw DenominatorVanished("denominator vanishes at specialization point");
      return GaussianRational(1) / x;
    };
    return evaluate<GaussianRational>(conv, value, inv);
  }

  // Substitute parameters by ParamScalars; unlisted symbols stay symbolic.
  ParamScalar substitute(const std::map<int, ParamScalar>& at) const {
    auto conv = [](const GaussianRational& c) { return ParamScalar(c); };
    auto value = [&](int v) -> ParamScalar {
      auto it = at.find(v);
      if (it == at.end()) return ParamScalar(ParamPoly::var(v));
      return it->second;
    };
    ParamScalar r = poly_.evaluate<ParamScalar>(conv, value);
    for (auto& [f, e] : atoms_) {
      ParamScalar x = f.evaluate<ParamScalar>(conv, value).atomized();
      r = r * x.pow(e);
    }
    return r;
  }

  // Display form: factored where the representation is factored.
  std::string str() const {
    if (is_zero()) return "0";
    std::vector<std::string> num;
    std::vector<bool> num_paren;
    std::string sign;
    if (poly_.is_constant()) {
      GaussianRational c = poly_.constant_value();
      bool neg = c.is_real() && c.re().sign() < 0;
      if (neg) {
        sign = "-";
        c = -c;
      }
      if (!c.is_one()) {
        num.push_back(c.str());
        num_paren.push_back(false);
      }
    } else {
      bool others = !atoms_.empty();
      num.push_back(others ? "(" + poly_str(poly_) + ")" : poly_str(poly_));
      num_paren.push_back(others);
    }
    std::vector<std::string> den;
    std::vector<bool> den_paren;
    for (auto& [f, e] : atoms_) {
      auto [s, paren] = atom_str(f, e < 0 ? -e : e);
      if (e > 0) {
        num.push_back(s);
        num_paren.push_back(paren);
      } else {
        den.push_back(s);
        den_paren.push_back(paren);
      }
    }
    std::string out = sign + join(num, num_paren);
    if (num.empty()) out = sign + "1";
    if (!den.empty()) {
      std::string d = join(den, den_paren);
      if (den.size() == 1) out += "/" + d;
      else out += "/(" + d + ")";
    }
    return out;
  }

  size_t hash() const { return numerator().hash() * 31u + denominator().hash(); }
  // Ordering is only used for deterministic containers; compares representations.
  friend bool operator<(const ParamScalar& a, const ParamScalar& b) {
    if (!(a.poly_ == b.poly_)) return a.poly_ < b.poly_;
    return a.atoms_ < b.atoms_;
  }

 private:
  ParamPoly poly_;
  std::vector<Atom> atoms_;

  static std::pair<std::string, bool> atom_str(const ParamPoly& f, int e) {
    std::string s = poly_str(f);
    bool single = f.size() == 1;
    std::string base = single ? s : "(" + s + ")";
    if (e > 1) base += "^" + std::to_string(e);
    return {base, !single && e == 1};
  }

  static std::string join(const std::vector<std::string>& parts, const std::vector<bool>& paren) {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k > 0 && !(paren[k] && paren[k - 1] && parts[k - 1].back() == ')')) out += "*";
      out += parts[k];
    }
    return out;
  }

  // p = c * (monomial content) * rest, rest monic.
  static std::pair<GaussianRational, std::vector<Atom>> atomize(const ParamPoly& p) {
    GaussianRational c = p.leading().second;
    ParamPoly q = p.scaled(GaussianRational(1) / c);
    std::vector<Atom> out;
    Monomial g = q.terms().front().first;
    for (auto& [m, cc] : q.terms())
      for (int v = 0; v < kMaxVars; ++v) g.e[static_cast<size_t>(v)] = std::min(g.e[static_cast<size_t>(v)], m.e[static_cast<size_t>(v)]);
    if (!g.is_one()) {
      q = *q.divide_exact(ParamPoly::monomial(g, GaussianRational(1)));
      for (int v = 0; v < kMaxVars; ++v)
        if (g.e[static_cast<size_t>(v)]) out.emplace_back(ParamPoly::var(v), g.e[static_cast<size_t>(v)]);
    }
    if (!q.is_constant()) out.emplace_back(std::move(q), 1);
    return {c, out};
  }

  static std::vector<Atom> merge_atoms(const std::vector<Atom>& a, const std::vector<Atom>& b, int sb) {
    std::vector<Atom> r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.emplace_back(b[j].first, sb * b[j].second);
        ++j;
      } else {
        int e = a[i].second + sb * b[j].second;
        if (e != 0) r.emplace_back(a[i].first, e);
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize_atoms() {
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.first < y.first; });
    std::vector<Atom> out;
    for (auto& a : atoms_) {
      if (!out.empty() && out.back().first == a.first) out.back().second += a.second;
      else out.push_back(std::move(a));
    }
    std::erase_if(out, [](const Atom& a) { return a.second == 0; });
    atoms_ = std::move(out);
  }

  // Cancel denominator atoms that divide the polynomial part.
  void reduce() {
    if (poly_.is_zero()) {
      atoms_.clear();
      return;
    }
    if (poly_.is_constant()) return;
    bool changed = false;
    for (auto& [f, e] : atoms_) {
      while (e < 0 && !poly_.is_constant() && f.total_degree() <= poly_.total_degree()) {
        auto q = poly_.divide_exact(f);
        if (!q) break;
        poly_ = std::move(*q);
        ++e;
        changed = true;
      }
    }
    if (changed) std::erase_if(atoms_, [](const Atom& a) { return a.second == 0; });
  }

  static ParamScalar add(const ParamScalar& a, const ParamScalar& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    ParamScalar r;
    if (a.atoms_ == b.atoms_) {
      r.poly_ = subtract ? a.poly_ - b.poly_ : a.poly_ + b.poly_;
      if (r.poly_.is_zero()) return {};
      r.atoms_ = a.atoms_;
      r.reduce();
      return r;
    }
    ParamPoly pa = a.poly_, pb = b.poly_;
    size_t i = 0, j = 0;
    const auto& A = a.atoms_;
    const auto& B = b.atoms_;
    while (i < A.size() || j < B.size()) {
      const ParamPoly* f;
      int ea = 0, eb = 0;
      if (j == B.size() || (i < A.size() && A[i].first < B[j].first)) {
        f = &A[i].first;
        ea = A[i++].second;
      } else if (i == A.size() || B[j].first < A[i].first) {
        f = &B[j].first;
        eb = B[j++].second;
      } else {
        f = &A[i].first;
        ea = A[i++].second;
        eb = B[j++].second;
      }
      int m = std::min(ea, eb);
      if (ea - m > 0) pa = pa * f->pow(ea - m);
      if (eb - m > 0) pb = pb * f->pow(eb - m);
      if (m != 0) r.atoms_.emplace_back(*f, m);
    }
    r.poly_ = subtract ? pa - pb : pa + pb;
    if (r.poly_.is_zero()) return {};
    r.reduce();
    return r;
  }
};

inline bool frac_equal(const ParamScalar& x, const ParamScalar& y) { return x == y; }

inline std::string display(const ParamScalar& x) { return x.str(); }
inline std::string display(const GaussianRational& x) { return x.str(); }

}  // namespace moplab

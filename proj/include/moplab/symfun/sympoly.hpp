#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moplab/core/field.hpp"
#include "moplab/partitions/partition.hpp"

namespace moplab {

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Symmetric function in the power-sum basis: sum of c_lambda p_lambda.
template <class C>
class SymPoly {
 public:
  using Map = std::map<Partition, C>;

  SymPoly() = default;
  SymPoly(int c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Partition{}, C(c));
  }
  static SymPoly constant(const C& c) {
    SymPoly r;
    if (!c.is_zero()) r.terms_.emplace(Partition{}, c);
    return r;
  }
  static SymPoly p(const Partition& lam, const C& c = C(1)) {
    SymPoly r;
    if (!c.is_zero()) r.terms_.emplace(lam, c);
    return r;
  }
  static SymPoly pk(int k) { return p(Partition{k}); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  C coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? C(0) : it->second;
  }
  int degree() const {
    int d = -1;
    for (auto& [lam, c] : terms_) d = std::max(d, lam.size());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.size();
    for (auto& [lam, c] : terms_)
      if (lam.size() != d) return false;
    return true;
  }
  SymPoly homogeneous_part(int d) const {
    SymPoly r;
    for (auto& [lam, c] : terms_)
      if (lam.size() == d) r.terms_.emplace(lam, c);
    return r;
  }

  std::optional<int> nvars() const { return nvars_; }
  SymPoly& set_nvars(std::optional<int> n) {
    nvars_ = n;
    return *this;
  }

  void add_term(const Partition& lam, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lam, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SymPoly operator+(SymPoly a, const SymPoly& b) {
    for (auto& [lam, c] : b.terms_) a.add_term(lam, c);
    return a;
  }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) {
    for (auto& [lam, c] : b.terms_) a.add_term(lam, -c);
    return a;
  }
  SymPoly operator-() const {
    SymPoly r = *this;
    for (auto& [lam, c] : r.terms_) c = -c;
    return r;
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (auto& [la, ca] : a.terms_)
      for (auto& [lb, cb] : b.terms_) r.add_term(join(la, lb), ca * cb);
    r.nvars_ = a.nvars_ ? a.nvars_ : b.nvars_;
    return r;
  }
  SymPoly scaled(const C& s) const {
    SymPoly r;
    r.nvars_ = nvars_;
    if (s.is_zero()) return r;
    for (auto& [lam, c] : terms_) r.add_term(lam, c * s);
    return r;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return (a - b).is_zero();
    auto it = b.terms_.begin();
    for (auto& [lam, c] : a.terms_) {
      if (!(lam == it->first) || !(c == it->second)) return (a - b).is_zero();
      ++it;
    }
    return true;
  }

  template <class D, class Conv>
  SymPoly<D> map_coeffs(Conv&& conv) const {
    SymPoly<D> r;
    for (auto& [lam, c] : terms_) r.add_term(lam, conv(c));
    r.set_nvars(nvars_);
    return r;
  }
  template <class D>
  SymPoly<D> cast() const {
    return map_coeffs<D>([](const C& c) { return D(c); });
  }

  // "1/2*p1^2+1/2*p2" style rendering with caller-supplied coefficient text.
  template <class Str>
  std::string str(Str&& coeff_str) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      const auto& parts = it->first.parts();
      for (size_t k = 0; k < parts.size();) {
        size_t e = k;
        while (e < parts.size() && parts[e] == parts[k]) ++e;
        if (!mono.empty()) mono += "*";
        mono += "p" + std::to_string(parts[k]);
        if (e - k > 1) mono += "^" + std::to_string(e - k);
        k = e;
      }
      std::string c = coeff_str(it->second);
      std::string t = mono.empty() ? c : (c == "1" ? mono : (c == "-1" ? "-" + mono : "(" + c + ")*" + mono));
      if (!out.empty() && t[0] != '-') out += "+";
      out += t;
    }
    return out;
  }

  static Partition join(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
  }

 private:
  Map terms_;
  std::optional<int> nvars_;
};

// Special loci for power sums.
struct DeltaLocus {
  int s;
};  // p_k = delta_{k,s}
template <class F>
struct AllLocus {
  F z;
};  // p_k = z for every k >= 1

template <class C>
C eval_delta(const SymPoly<C>& f, int s) {
  C acc(0);
  for (auto& [lam, c] : f.terms()) {
    bool ok = true;
    for (int part : lam.parts())
      if (part != s) ok = false;
    if (ok) acc = acc + c;
  }
  return acc;
}

template <class C, class F>
F eval_all(const SymPoly<C>& f, const F& z) {
  F acc(0);
  for (auto& [lam, c] : f.terms()) acc = acc + F(c) * ipow(z, lam.length());
  return acc;
}

// p_k = sum_i x_i^k
template <class C, class F>
F eval_x(const SymPoly<C>& f, const std::vector<F>& x) {
  if (f.nvars() && static_cast<size_t>(*f.nvars()) != x.size())
    throw ArityMismatch("eval_x: " + std::to_string(x.size()) + " values for " + std::to_string(*f.nvars()) + " variables");
  std::map<int, F> pk;
  auto p = [&](int k) -> const F& {
    auto it = pk.find(k);
    if (it != pk.end()) return it->second;
    F s(0);
    for (auto& xi : x) s = s + ipow(xi, k);
    return pk.emplace(k, s).first->second;
  };
  F acc(0);
  for (auto& [lam, c] : f.terms()) {
    F t = F(c);
    for (int part : lam.parts()) t = t * p(part);
    acc = acc + t;
  }
  return acc;
}

// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}; alpha = 1 undeformed.
template <class C>
C hall_pair(const SymPoly<C>& f, const SymPoly<C>& g, const C& alpha = C(1)) {
  C acc(0);
  for (auto& [lam, c] : f.terms()) {
    auto it = g.terms().find(lam);
    if (it == g.terms().end()) continue;
    acc = acc + c * it->second * C(z_lambda(lam)) * ipow(alpha, lam.length());
  }
  return acc;
}

// Adjoint of multiplication by g under the alpha-deformed pairing:
// p_k -> k alpha d/dp_k.
template <class C>
SymPoly<C> skew_by(const SymPoly<C>& f, const SymPoly<C>& g, const C& alpha = C(1)) {
  SymPoly<C> r;
  for (auto& [mu, cg] : g.terms()) {
    std::map<int, int> need;
    for (int k : mu.parts()) need[k]++;
    for (auto& [lam, cf] : f.terms()) {
      std::map<int, int> have;
      for (int k : lam.parts()) have[k]++;
      C factor = cg * cf;
      bool ok = true;
      for (auto& [k, m] : need) {
        int h = have.count(k) ? have[k] : 0;
        if (h < m) {
          ok = false;
          break;
        }
        for (int t = 0; t < m; ++t) factor = factor * C(Rational(static_cast<long long>(k) * (h - t))) * alpha;
        have[k] = h - m;
      }
      if (!ok) continue;
      std::vector<int> rest;
      for (auto it = have.rbegin(); it != have.rend(); ++it)
        for (int t = 0; t < it->second; ++t) rest.push_back(it->first);
      r.add_term(Partition(std::move(rest)), factor);
    }
  }
  r.set_nvars(f.nvars());
  return r;
}

}  // namespace moplab

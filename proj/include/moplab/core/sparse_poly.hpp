#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moplab/core/symbols.hpp"

namespace moplab {

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<uint8_t>(s);
    }
    return r;
  }
  // a / b, assuming b divides a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial var(int v, int k = 1) {
    Monomial m;
    m.e[static_cast<size_t>(v)] = static_cast<uint8_t>(k);
    return m;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    static_assert(sizeof(m.e) % 8 == 0);
    uint64_t h = 0x7F4A7C159E3779B9ULL;
    for (size_t k = 0; k < sizeof(m.e); k += 8) {
      uint64_t w;
      std::memcpy(&w, m.e.data() + k, 8);
      h = (h ^ w) * 0x9E3779B97F4A7C15ULL;
      h ^= h >> 29;
    }
    return static_cast<size_t>(h);
  }
};

// Sparse multivariate polynomial over a coefficient field C. Terms are kept
// sorted by descending lex order of exponent vectors (variable 0 most
// significant); no zero coefficients are stored.
template <class C>
class SparsePoly {
 public:
  using Term = std::pair<Monomial, C>;

  SparsePoly() = default;
  SparsePoly(C c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero_coeff(c)) terms_.emplace_back(Monomial{}, std::move(c));
  }
  SparsePoly(int c) : SparsePoly(C(c)) {}  // NOLINT(google-explicit-constructor)

  static SparsePoly var(int v, C c = C(1), int k = 1) {
    SparsePoly p;
    if (!is_zero_coeff(c)) p.terms_.emplace_back(Monomial::var(v, k), std::move(c));
    return p;
  }
  static SparsePoly monomial(const Monomial& m, C c) {
    SparsePoly p;
    if (!is_zero_coeff(c)) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  // Terms must be sorted descending with distinct monomials and nonzero coefficients.
  static SparsePoly from_sorted(std::vector<Term> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    return p;
  }
  static SparsePoly from_terms(std::vector<Term> terms) {
    std::unordered_map<Monomial, C, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, std::move(c));
      else it->second += c;
    }
    return from_map(std::move(acc));
  }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  C constant_value() const {
    if (terms_.empty()) return C(0);
    if (!terms_.back().first.is_one()) return C(0);
    return terms_.back().second;
  }
  const Term& leading() const { return terms_.front(); }

  int total_degree() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  int degree_in(int v) const {
    int d = 0;
    for (auto& t : terms_) d = std::max<int>(d, t.first.e[static_cast<size_t>(v)]);
    return d;
  }
  std::vector<int> variables() const {
    std::vector<int> out;
    for (int v = 0; v < kMaxVars; ++v)
      for (auto& t : terms_)
        if (t.first.e[static_cast<size_t>(v)]) {
          out.push_back(v);
          break;
        }
    return out;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, ca * cb);
        else it->second += ca * cb;
      }
    return from_map(std::move(acc));
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const C& c) const {
    if (is_zero_coeff(c)) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }

  SparsePoly mul_term(const Monomial& m, const C& c) const {
    if (is_zero_coeff(c)) return {};
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;  // multiplying by a monomial preserves lex order
  }

  SparsePoly pow(int k) const {
    SparsePoly r(C(1)), b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  // Exact division; nullopt if g does not divide *this.
  std::optional<SparsePoly> divide_exact(const SparsePoly& g) const {
    if (g.is_zero()) throw std::domain_error("SparsePoly: division by zero polynomial");
    if (is_zero()) return SparsePoly{};
    const auto& [gm, gc] = g.terms_.front();
    if (g.terms_.size() == 1) {
      SparsePoly q;
      q.terms_.reserve(terms_.size());
      for (auto& [m, c] : terms_) {
        if (!gm.divides(m)) return std::nullopt;
        q.terms_.emplace_back(m / gm, c / gc);
      }
      return q;
    }
    // quick necessary checks
    if (!gm.divides(terms_.front().first)) return std::nullopt;
    for (int v = 0; v < kMaxVars; ++v)
      if (g.degree_in(v) > degree_in(v)) return std::nullopt;
    std::map<Monomial, C, std::greater<Monomial>> r;
    for (auto& t : terms_) r.emplace(t.first, t.second);
    std::vector<Term> q;
    while (!r.empty()) {
      auto it = r.begin();
      if (!gm.divides(it->first)) return std::nullopt;
      Monomial qm = it->first / gm;
      C qc = it->second / gc;
      r.erase(it);
      for (size_t i = 1; i < g.terms_.size(); ++i) {
        Monomial m = g.terms_[i].first * qm;
        C c = g.terms_[i].second * qc;
        auto jt = r.find(m);
        if (jt == r.end()) {
          r.emplace(m, -c);
        } else {
          jt->second -= c;
          if (is_zero_coeff(jt->second)) r.erase(jt);
        }
      }
      q.emplace_back(qm, std::move(qc));
    }
    return from_sorted(std::move(q));  // quotient terms emerge in descending order
  }

  SparsePoly derivative(int v) const {
    std::vector<Term> out;
    for (auto& [m, c] : terms_) {
      int k = m.e[static_cast<size_t>(v)];
      if (!k) continue;
      Monomial mm = m;
      mm.e[static_cast<size_t>(v)] = static_cast<uint8_t>(k - 1);
      out.emplace_back(mm, c * C(k));
    }
    return from_terms(std::move(out));
  }

  // Evaluate with value(v) supplying an element of ring T for each variable used.
  template <class T, class Conv, class Value>
  T evaluate(Conv&& conv, Value&& value) const {
    T result = conv(C(0));
    if (is_zero()) return result;
    std::map<int, std::vector<T>> powers;
    for (int v : variables()) {
      std::vector<T> p;
      p.push_back(conv(C(1)));
      T x = value(v);
      for (int k = 1; k <= degree_in(v); ++k) p.push_back(p.back() * x);
      powers.emplace(v, std::move(p));
    }
    for (auto& [m, c] : terms_) {
      T t = conv(c);
      for (auto& [v, p] : powers) {
        int k = m.e[static_cast<size_t>(v)];
        if (k) t = t * p[static_cast<size_t>(k)];
      }
      result = result + t;
    }
    return result;
  }

  // x_v -> x_v + delta
  SparsePoly shift(int v, const C& delta) const {
    if (is_zero_coeff(delta)) return *this;
    int dmax = degree_in(v);
    std::vector<C> dp{C(1)};
    for (int k = 1; k <= dmax; ++k) dp.push_back(dp.back() * delta);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    for (auto& [m, c] : terms_) {
      int e = m.e[static_cast<size_t>(v)];
      C binom(1);
      for (int k = e; k >= 0; --k) {
        // binom = C(e, k)
        Monomial mm = m;
        mm.e[static_cast<size_t>(v)] = static_cast<uint8_t>(k);
        C val = c * binom * dp[static_cast<size_t>(e - k)];
        auto it = acc.find(mm);
        if (it == acc.end()) acc.emplace(mm, std::move(val));
        else it->second += val;
        binom = binom * C(k) / C(e - k + 1);
      }
    }
    return from_map(std::move(acc));
  }

  // Swap two variables.
  SparsePoly swap_vars(int a, int b) const {
    std::vector<Term> out;
    for (auto& [m, c] : terms_) {
      Monomial mm = m;
      std::swap(mm.e[static_cast<size_t>(a)], mm.e[static_cast<size_t>(b)]);
      out.emplace_back(mm, c);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first > y.first; });
    return from_sorted(std::move(out));
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  // Total order used for canonical containers of polynomials.
  friend bool operator<(const SparsePoly& a, const SparsePoly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first > b.terms_[i].first;
      if (!(a.terms_[i].second == b.terms_[i].second)) return a.terms_[i].second < b.terms_[i].second;
    }
    return a.terms_.size() < b.terms_.size();
  }

  size_t hash() const {
    size_t h = terms_.size();
    for (auto& [m, c] : terms_) h = h * 1000003u ^ (MonomialHash()(m) + 31u * c.hash());
    return h;
  }

 private:
  std::vector<Term> terms_;

  static bool is_zero_coeff(const C& c) { return c.is_zero(); }

  static SparsePoly from_map(std::unordered_map<Monomial, C, MonomialHash>&& acc) {
    SparsePoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!is_zero_coeff(c)) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    return r;
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!is_zero_coeff(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }
};

}  // namespace moplab

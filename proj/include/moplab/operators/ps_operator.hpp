#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moplab/symfun/sympoly.hpp"

namespace moplab {

struct NonNilpotentGrading : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// coeff * prod p_{mult} * prod d/dp_{diff}; p_0 stands for N.
template <class F>
struct PSTerm {
  F coeff;
  std::vector<int> mult;
  std::vector<int> diff;

  int shift() const {
    int s = 0;
    for (int k : mult) s += k;
    for (int k : diff) s -= k;
    return s;
  }
};

// Normal-ordered differential operator in the power sums. Terms are
// generated on demand up to the degree of the input.
template <class F>
class PSOperator {
 public:
  using Generator = std::function<std::vector<PSTerm<F>>(int max_degree)>;

  PSOperator(std::string name, std::optional<int> shift, F n, Generator gen)
      : name_(std::move(name)), shift_(shift), n_(std::move(n)), gen_(std::move(gen)) {}

  const std::string& name() const { return name_; }
  // nullopt when the terms do not share one degree shift
  std::optional<int> shift() const { return shift_; }
  const F& nvars() const { return n_; }

  std::vector<PSTerm<F>> terms(int max_degree) const {
    auto t = gen_(max_degree);
    for (auto& term : t)
      if (shift_ && term.shift() != *shift_) throw std::logic_error(name_ + ": term with inconsistent degree shift");
    return t;
  }

  PSOperator scaled(const F& s) const {
    auto g = gen_;
    return PSOperator(name_, shift_, n_, [g, s](int d) {
      auto t = g(d);
      for (auto& term : t) term.coeff = term.coeff * s;
      return t;
    });
  }

  friend PSOperator operator+(const PSOperator& a, const PSOperator& b) {
    auto ga = a.gen_, gb = b.gen_;
    std::optional<int> sh = a.shift_ == b.shift_ ? a.shift_ : std::nullopt;
    return PSOperator(a.name_ + "+" + b.name_, sh, a.n_, [ga, gb](int d) {
      auto t = ga(d);
      auto u = gb(d);
      t.insert(t.end(), u.begin(), u.end());
      return t;
    });
  }

 private:
  std::string name_;
  std::optional<int> shift_;
  F n_;
  Generator gen_;
};

template <class F, class C>
SymPoly<F> apply_ps(const PSOperator<F>& op, const SymPoly<C>& f) {
  SymPoly<F> out;
  if (f.is_zero()) return out;
  const int deg = f.degree();
  for (auto& term : op.terms(deg)) {
    F pre = term.coeff;
    std::vector<int> extra;
    for (int k : term.mult) {
      if (k == 0) pre = pre * op.nvars();
      else extra.push_back(k);
    }
    if (pre.is_zero()) continue;
    for (auto& [lam, c] : f.terms()) {
      std::map<int, int> have;
      for (int k : lam.parts()) have[k]++;
      F factor = pre * F(c);
      bool ok = true;
      for (int k : term.diff) {
        int& h = have[k];
        if (h == 0) {
          ok = false;
          break;
        }
        factor = factor * F(h);
        --h;
      }
      if (!ok) continue;
      std::vector<int> parts = extra;
      for (auto& [k, m] : have)
        for (int t = 0; t < m; ++t) parts.push_back(k);
      std::sort(parts.rbegin(), parts.rend());
      out.add_term(Partition(std::move(parts)), factor);
    }
  }
  return out;
}

// sum_k scale^k op^k f / k!, finite because op lowers the degree.
template <class F, class C>
SymPoly<F> exp_ps(const PSOperator<F>& op, const F& scale, const SymPoly<C>& f) {
  if (!op.shift() || *op.shift() >= 0) throw NonNilpotentGrading(op.name() + " does not lower the degree");
  SymPoly<F> term = f.template cast<F>(), acc = term;
  for (int k = 1; !term.is_zero(); ++k) {
    term = apply_ps(op, term).scaled(scale / F(k));
    acc = acc + term;
  }
  return acc;
}

// ---- named operators --------------------------------------------------

// sum_i d^2/dx_i^2 + 2 beta sum_{i != j} (x_i - x_j)^{-1} d/dx_i
template <class F>
PSOperator<F> w2_beta(const F& n, const F& beta) {
  return PSOperator<F>("W2[beta]", -2, n, [beta](int d) {
    std::vector<PSTerm<F>> t;
    for (int a = 1; a <= d; ++a)
      for (int b = 1; a + b <= d; ++b) t.push_back({F(a * b), {a + b - 2}, {a, b}});
    for (int m = 2; m <= d; ++m) {
      F c = (F(1) - beta) * F(m * (m - 1));
      if (!c.is_zero()) t.push_back({c, {m - 2}, {m}});
      for (int a = 0; a <= m - 2; ++a) t.push_back({beta * F(m), {a, m - 2 - a}, {m}});
    }
    return t;
  });
}

template <class F>
PSOperator<F> w2(const F& n) {
  auto op = w2_beta(n, F(1));
  return PSOperator<F>("W2", -2, n, [op](int d) { return op.terms(d); });
}

template <class F>
PSOperator<F> l0(const F& n) {
  return PSOperator<F>("l0", 0, n, [](int d) {
    std::vector<PSTerm<F>> t;
    for (int k = 1; k <= d; ++k) t.push_back({F(k), {k}, {k}});
    return t;
  });
}

enum class W0Reading { FirstDerivative, SecondDerivative };

// sum (n+m) p_n p_m d/dp_{n+m} (or d^2/dp_{n+m}^2) + sum n m p_{n+m} d^2/dp_n dp_m
template <class F>
PSOperator<F> jacobi_w0(const F& n, W0Reading reading) {
  std::optional<int> shift = reading == W0Reading::FirstDerivative ? std::optional<int>(0) : std::nullopt;
  return PSOperator<F>(reading == W0Reading::FirstDerivative ? "W0" : "W0[d2]", shift, n, [reading](int d) {
    std::vector<PSTerm<F>> t;
    for (int s = 1; s <= d; ++s)
      for (int a = 0; a <= s; ++a) {
        if (reading == W0Reading::FirstDerivative) t.push_back({F(s), {a, s - a}, {s}});
        else t.push_back({F(s), {a, s - a}, {s, s}});
      }
    for (int a = 1; a <= d; ++a)
      for (int b = 1; a + b <= d; ++b) t.push_back({F(a * b), {a + b}, {a, b}});
    return t;
  });
}

// sum (n+m+1) p_n p_m d/dp_{n+m+1} + sum n m p_{n+m-1} d^2/dp_n dp_m
template <class F>
PSOperator<F> jacobi_f2(const F& n) {
  return PSOperator<F>("F2", -1, n, [](int d) {
    std::vector<PSTerm<F>> t;
    for (int s = 1; s <= d; ++s)
      for (int a = 0; a <= s - 1; ++a) t.push_back({F(s), {a, s - 1 - a}, {s}});
    for (int a = 1; a <= d; ++a)
      for (int b = 1; a + b <= d; ++b) t.push_back({F(a * b), {a + b - 1}, {a, b}});
    return t;
  });
}

// sum (n+1) p_n d/dp_{n+1}
template <class F>
PSOperator<F> jacobi_f1(const F& n) {
  return PSOperator<F>("F1", -1, n, [](int d) {
    std::vector<PSTerm<F>> t;
    for (int k = 1; k <= d; ++k) t.push_back({F(k), {k - 1}, {k}});
    return t;
  });
}

}  // namespace moplab

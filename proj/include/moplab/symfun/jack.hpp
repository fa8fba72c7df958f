#pragma once

#include <map>
#include <mutex>
#include <string>
#include <typeinfo>

#include "moplab/core/matrix.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

// Coefficient of x^mu in p_lambda: number of maps from parts of lambda to
// positions of mu with matching sums.
inline long long p_to_m_entry(const Partition& lam, const Partition& mu) {
  std::vector<int> room = mu.parts();
  const auto& parts = lam.parts();
  long long count = 0;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == parts.size()) {
      for (int r : room)
        if (r) return;
      ++count;
      return;
    }
    for (auto& r : room)
      if (r >= parts[k]) {
        r -= parts[k];
        self(self, k + 1);
        r += parts[k];
      }
  };
  rec(rec, 0);
  return count;
}

// Monomial symmetric functions m_mu in the power-sum basis.
inline const std::map<Partition, QSym>& monomials_in_p(int n) {
  static std::mutex mu;
  static std::map<int, std::map<Partition, QSym>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto parts = partitions_of(n);
  const size_t k = parts.size();
  Matrix<Rational> L(k, k);  // p_lambda = sum_mu L m_mu
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) L(a, b) = Rational(p_to_m_entry(parts[a], parts[b]));
  Matrix<Rational> Li = inverse(L);  // m_mu = sum_lambda Li(mu, lambda) p_lambda
  std::map<Partition, QSym> out;
  for (size_t b = 0; b < k; ++b) {
    QSym m;
    for (size_t a = 0; a < k; ++a) m.add_term(parts[a], Li(b, a));
    out.emplace(parts[b], std::move(m));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

// Monomial-basis coefficients of a homogeneous degree-n function.
template <class C>
std::map<Partition, C> to_monomial_basis(const SymPoly<C>& f) {
  std::map<Partition, C> out;
  for (auto& [lam, c] : f.terms())
    for (auto& mu : partitions_of(lam.size())) {
      long long e = p_to_m_entry(lam, mu);
      if (!e) continue;
      C add = c * C(Rational(e));
      auto [it, fresh] = out.emplace(mu, add);
      if (!fresh) it->second = it->second + add;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

template <class F>
struct JackParams {
  F beta;
  F alpha() const { return F(1) / beta; }
};

// P-normalized Jack polynomials of degree n (leading m_R coefficient 1), by
// Gram-Schmidt from the dominance-lowest partition upward.
template <class F>
const std::map<Partition, SymPoly<F>>& jack_degree(int n, const JackParams<F>& jp) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::map<Partition, SymPoly<F>>> cache;
  std::pair<int, std::string> key{n, jp.beta.str()};
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const F alpha = jp.alpha();
  const auto& mons = monomials_in_p(n);
  auto parts = partitions_of(n);
  std::map<Partition, SymPoly<F>> done;
  std::map<Partition, F> norms;
  for (auto p = parts.rbegin(); p != parts.rend(); ++p) {
    SymPoly<F> m = mons.at(*p).template cast<F>();
    SymPoly<F> cur = m;
    for (auto& [q, pq] : done) {
      F c = hall_pair(m, pq, alpha) / norms.at(q);
      if (!c.is_zero()) cur = cur - pq.scaled(c);
    }
    norms.emplace(*p, hall_pair(cur, cur, alpha));
    done.emplace(*p, std::move(cur));
  }
  return cache.emplace(key, std::move(done)).first->second;
}

template <class F>
SymPoly<F> jack(const Partition& r, const JackParams<F>& jp) {
  return jack_degree(r.size(), jp).at(r);
}

// P_{R/Q} = Q_Q^perp P_R with Q_Q = P_Q / <P_Q, P_Q>.
template <class F>
SymPoly<F> skew_jack(const Partition& r, const Partition& q, const JackParams<F>& jp) {
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  const F alpha = jp.alpha();
  SymPoly<F> pq = jack(q, jp);
  SymPoly<F> dual = pq.scaled(F(1) / hall_pair(pq, pq, alpha));
  return skew_by(jack(r, jp), dual, alpha);
}

// xi^beta_R = prod over boxes (beta N + j - 1 - beta (i - 1))
template <class F>
F xi_beta(const Partition& r, const F& n, const F& beta) {
  F out(1);
  for (auto [i, j] : r.boxes()) out = out * factored(beta * n + F(j - 1) - beta * F(i - 1));
  return out;
}

}  // namespace moplab

#pragma once

#include <map>
#include <mutex>

#include "moplab/core/matrix.hpp"
#include "moplab/symfun/sympoly.hpp"

namespace moplab {

using QSym = SymPoly<Rational>;

// h_k = sum over lambda |- k of p_lambda / z_lambda
inline const QSym& complete_h(int k) {
  static std::mutex mu;
  static std::map<int, QSym> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  QSym h;
  if (k == 0) h = QSym(1);
  if (k > 0)
    for (auto& lam : partitions_of(k)) h.add_term(lam, Rational(1) / z_lambda(lam));
  return cache.emplace(k, std::move(h)).first->second;
}

// Jacobi-Trudi: S_R = det h_{R_i - i + j}.
inline QSym schur(const Partition& r) {
  static std::mutex mu;
  static std::map<Partition, QSym> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  const size_t l = static_cast<size_t>(r.length());
  Matrix<QSym> m(l, l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) {
      int k = r.row(static_cast<int>(i) + 1) - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0) m(i, j) = complete_h(k);
    }
  QSym s = determinant(m);
  std::lock_guard lock(mu);
  return cache.emplace(r, std::move(s)).first->second;
}

template <class F>
SymPoly<F> schur_as(const Partition& r) {
  return schur(r).template cast<F>();
}

inline QSym skew_schur(const Partition& r, const Partition& q) {
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  return skew_by(schur(r), schur(q));
}

}  // namespace moplab

#pragma once

#include <string>

#include "moplab/models/models.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

enum class MPBoxFactor { UOverUMinusOne, OneOverOneMinusU };

// Convention flags for the printed SI right-hand sides.
struct ClosedForm {
  ModelKind model = ModelKind::GaussianHermite;
  int wilson_shift = -1;  // numerators xi_R(N + shift + a + b), ...
  bool mp_sign = true;    // i^{N(N+7)/2}
  MPBoxFactor mp_box = MPBoxFactor::OneOverOneMinusU;

  static ClosedForm paper_literal(ModelKind k) { return {k, 0, true, MPBoxFactor::UOverUMinusOne}; }
  static ClosedForm resolved(ModelKind k) { return {k, -1, true, MPBoxFactor::OneOverOneMinusU}; }

  std::string str() const {
    switch (model) {
      case ModelKind::MeixnerPollaczek:
        return std::string("sign=") + (mp_sign ? "on" : "off") + ",box=" +
               (mp_box == MPBoxFactor::UOverUMinusOne ? "u/(u-1)" : "1/(1-u)");
      case ModelKind::Wilson: return "shift=" + std::string(wilson_shift == 0 ? "N" : "N" + std::to_string(wilson_shift));
      default: return "as-printed";
    }
  }
};

template <class F>
F closed_form_expectation(const ClosedForm& cf, const ModelId<F>& m, const Partition& r, int n) {
  if (r.length() > n) return F(0);
  const F nn(n);
  const F d1(eval_delta(schur(r), 1));
  const int size = r.size();
  switch (cf.model) {
    case ModelKind::GaussianHermite: return F(eval_delta(schur(r), 2)) * xi(r, nn);
    case ModelKind::SelbergJacobi: {
      const F& u = m["u"];
      const F& v = m["v"];
      return d1 * xi(r, nn) * xi(r, u + nn) / xi(r, u + v + F(2 * n));
    }
    case ModelKind::MeixnerPollaczek: {
      const F& lam = m["lambda"];
      const F& u = m["u"];
      F sign = cf.mp_sign ? i_pow<F>(static_cast<long long>(n) * (n + 7) / 2) : F(1);
      F box = cf.mp_box == MPBoxFactor::UOverUMinusOne ? factored(u) / factored(u - F(1)) : F(1) / factored(F(1) - u);
      return sign * d1 * xi(r, nn) * xi(r, F(2) * lam + F(n - 1)) * ipow(box, size);
    }
    case ModelKind::Wilson: {
      const F &a = m["a"], &b = m["b"], &c = m["c"], &d = m["d"];
      F s(n + cf.wilson_shift);
      F z = a + b + c + d;
      return d1 * xi(r, nn) * xi(r, s + a + b) * xi(r, s + a + c) * xi(r, s + a + d) / xi(r, F(2 * (n - 1)) + z);
    }
  }
  return F(0);
}

// Normalized moment functional of a model on its base basis.
template <class F>
std::function<F(int)> moment_functional(const ModelId<F>& m) {
  auto fam = base_family(m);
  return [fam](int k) { return fam.moment(k); };
}

}  // namespace moplab

#pragma once

#include <string>

#include "moplab/core/report.hpp"
#include "moplab/detquotient/multivariate.hpp"

namespace moplab {

// <P_R P_Q> against 0 for R != Q. For R == Q the norm is returned as lhs
// and the verdict asks only that it be nonzero.
template <class F>
Report orthogonality_check(const Family<F>& fam, const Partition& r, const Partition& q, int n) {
  F g = andreief_gram(fam, r, q, n);
  if (r == q) {
    Report rep = make_report("orthogonality", fam.name(), r, q, n, ParamScalar(g), ParamScalar(g), "norm");
    rep.equal = !g.is_zero();
    return rep;
  }
  return make_report("orthogonality", fam.name(), r, q, n, ParamScalar(g), ParamScalar(0));
}

}  // namespace moplab

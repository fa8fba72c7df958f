#pragma once

#include <optional>
#include <string>
#include <utility>

#include "moplab/core/param_scalar.hpp"
#include "moplab/partitions/partition.hpp"

namespace moplab {

// Verification record for one identity instance.
struct Report {
  std::string id;
  std::string model;
  Partition r;
  std::optional<Partition> q;
  int n = 0;
  ParamScalar lhs;
  ParamScalar rhs;
  bool equal = false;
  std::optional<ParamScalar> discrepancy;  // lhs / rhs when unequal
  std::string note;
};

inline Report make_report(std::string id, std::string model, Partition r, std::optional<Partition> q, int n, ParamScalar lhs,
                          ParamScalar rhs, std::string note = {}) {
  Report rep{std::move(id), std::move(model), std::move(r), std::move(q), n, std::move(lhs), std::move(rhs), false, {}, std::move(note)};
  rep.equal = frac_equal(rep.lhs, rep.rhs);
  if (!rep.equal && !rep.rhs.is_zero() && !rep.lhs.is_zero()) {
    ParamScalar d = rep.lhs / rep.rhs;
    if (frac_equal(d * rep.rhs, rep.lhs)) rep.discrepancy = d;
  }
  return rep;
}

}  // namespace moplab

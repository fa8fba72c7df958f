#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/core/specializer.hpp"
#include "moplab/silab/alpha.hpp"
#include "moplab/silab/si.hpp"

namespace moplab {

struct NoConsistentVariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VariantOutcome {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::optional<Report> first_failure;
};

// One convention axis swept over the fixed panel.
struct ConventionAxis {
  std::string name;
  std::vector<VariantOutcome> variants;

  std::optional<std::string> selected() const {
    std::optional<std::string> pick;
    for (auto& v : variants)
      if (v.fail == 0 && v.pass > 0) {
        if (pick) return std::nullopt;
        pick = v.name;
      }
    return pick;
  }
};

struct Resolution {
  std::string model;
  std::vector<ConventionAxis> axes;

  bool consistent() const {
    for (auto& a : axes)
      if (!a.selected()) return false;
    return true;
  }
  // Throws NoConsistentVariant naming the first unresolved axis.
  std::string selected_or_throw() const {
    std::string out;
    for (auto& a : axes) {
      auto s = a.selected();
      if (!s) throw NoConsistentVariant(model + ": no unique variant for " + a.name);
      out += (out.empty() ? "" : ";") + a.name + "=" + *s;
    }
    return out;
  }
};

namespace detail {
inline void tally(VariantOutcome& v, const Report& r) {
  if (r.equal) {
    ++v.pass;
  } else {
    ++v.fail;
    if (!v.first_failure) v.first_failure = r;
  }
}

// Panel: all R with |R| <= 3, N in {1, 2, 3}.
template <class Fn>
void for_panel(Fn&& fn) {
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(3, n)) fn(r, n);
}

inline ModelId<GaussianRational> specialized_model(ModelKind k, uint64_t seed) {
  Specializer sp(seed, model_parameters(k));
  ModelId<GaussianRational> m{k, {}};
  for (auto& p : model_parameters(k)) m.params.emplace(p, sp.value(p));
  return m;
}
}  // namespace detail

inline ConventionAxis si_axis(ModelKind k, const std::vector<std::pair<std::string, ClosedForm>>& variants, uint64_t seed) {
  auto m = detail::specialized_model(k, seed);
  ConventionAxis axis{"closed-form", {}};
  for (auto& [name, cf] : variants) {
    VariantOutcome out{name, 0, 0, {}};
    detail::for_panel([&](const Partition& r, int n) { detail::tally(out, verify_si(m, r, n, cf)); });
    axis.variants.push_back(std::move(out));
  }
  return axis;
}

// Sweeps the printed ambiguities of one model on the fixed panel.
inline Resolution resolve_conventions(ModelKind k, uint64_t seed = kDefaultSeed) {
  Resolution res{model_name(k), {}};
  switch (k) {
    case ModelKind::GaussianHermite: {
      res.axes.push_back(si_axis(k, {{"as-printed", ClosedForm::resolved(k)}}, seed));
      for (bool inverse : {false, true}) {
        ConventionAxis axis{inverse ? "expansion-S-in-H" : "expansion-H-in-S", {}};
        for (bool sgn : {false, true}) {
          VariantOutcome out{sgn ? "signed" : "unsigned", 0, 0, {}};
          detail::for_panel([&](const Partition& r, int n) {
            for (auto& q : subshapes(r, n)) detail::tally(out, hermite_expansion_check(r, q, n, inverse, sgn));
          });
          axis.variants.push_back(std::move(out));
        }
        res.axes.push_back(std::move(axis));
      }
      break;
    }
    case ModelKind::SelbergJacobi:
      res.axes.push_back(si_axis(k, {{"as-printed", ClosedForm::resolved(k)}}, seed));
      break;
    case ModelKind::MeixnerPollaczek: {
      std::vector<std::pair<std::string, ClosedForm>> vs;
      for (bool sgn : {true, false})
        for (auto box : {MPBoxFactor::UOverUMinusOne, MPBoxFactor::OneOverOneMinusU}) {
          ClosedForm cf{k, -1, sgn, box};
          vs.emplace_back(cf.str(), cf);
        }
      res.axes.push_back(si_axis(k, vs, seed));
      break;
    }
    case ModelKind::Wilson: {
      std::vector<std::pair<std::string, ClosedForm>> vs;
      for (int shift : {0, -1}) {
        ClosedForm cf{k, shift, true, MPBoxFactor::OneOverOneMinusU};
        vs.emplace_back(cf.str(), cf);
      }
      res.axes.push_back(si_axis(k, vs, seed));
      // xi_{R,Q} orientation in the alpha numerators: alpha must depend on z only.
      ConventionAxis axis{"xi-orientation", {}};
      for (bool tr : {false, true}) {
        AlphaConvention cv;
        cv.transposed = tr;
        VariantOutcome out{tr ? "transposed" : "plain", 0, 0, {}};
        for (int n = 1; n <= 3; ++n)
          for (auto& r : partitions_up_to(3, n))
            for (auto& q : subshapes(r, n)) {
              bool ok = false;
              std::string note;
              try {
                ok = alpha_depends_on_z_only(r, q, n, cv);
              } catch (const ZeroCoefficient& e) {
                note = e.what();
              }
              Report rep = make_report("alpha:z-only", "wilson", r, q, n, ParamScalar(ok ? 1 : 0), ParamScalar(1), note);
              detail::tally(out, rep);
            }
        axis.variants.push_back(std::move(out));
      }
      res.axes.push_back(std::move(axis));
      break;
    }
  }
  return res;
}

}  // namespace moplab

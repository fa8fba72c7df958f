#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/core/param_scalar.hpp"

namespace moplab {

inline constexpr uint64_t kDefaultSeed = 20240601;

// Deterministic rational assignment for a fixed list of parameters. Values are
// drawn with primes >= 7 in the denominator so that sums with small integers
// never vanish by accident; collisions with registered denominators resample.
class Specializer {
 public:
  Specializer(uint64_t seed, std::vector<std::string> params) : seed_(seed), rng_(seed) {
    for (auto& p : params) ids_.push_back(symbol_id(p));
    draw();
  }

  uint64_t seed() const { return seed_; }
  const std::map<int, GaussianRational>& assignments() const { return values_; }
  GaussianRational value(const std::string& name) const {
    auto it = values_.find(symbol_id(name));
    if (it == values_.end()) throw UnknownParameter("unassigned parameter: " + name);
    return it->second;
  }

  // Registers a denominator that must stay nonzero; resamples until it does.
  void register_denominator(const ParamScalar& d) {
    guards_.push_back(d);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      if (all_guards_nonzero()) return;
      draw();
    }
    throw DenominatorVanished("Specializer: could not avoid registered denominators");
  }

  GaussianRational specialize(const ParamScalar& x) const { return x.specialize(values_); }

 private:
  uint64_t seed_;
  std::mt19937_64 rng_;
  std::vector<int> ids_;
  std::map<int, GaussianRational> values_;
  std::vector<ParamScalar> guards_;

  bool all_guards_nonzero() const {
    for (auto& g : guards_) {
      try {
        if (g.specialize(values_).is_zero()) return false;
      } catch (const DenominatorVanished&) {
        return false;
      }
    }
    return true;
  }

  void draw() {
    static constexpr long long kDen[] = {7, 11, 13, 17, 19, 23, 29, 31};
    values_.clear();
    std::vector<Rational> used;
    for (int id : ids_) {
      for (;;) {
        long long d = kDen[rng_() % 8];
        long long n = static_cast<long long>(rng_() % 401) - 200;
        if (n == 0 || std::gcd(n, d) != 1) continue;
        Rational r(n, d);
        bool clash = false;
        for (auto& q : used)
          if (q == r || q == -r) clash = true;
        if (clash) continue;
        used.push_back(r);
        values_[id] = GaussianRational(r);
        break;
      }
    }
  }
};

inline GaussianRational specialize(const ParamScalar& x, const Specializer& s) { return s.specialize(x); }

}  // namespace moplab

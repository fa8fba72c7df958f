#include <catch_amalgamated.hpp>

#include <random>

#include "../oracles/murnaghan_nakayama.hpp"
#include "moplab/symfun/jack.hpp"
#include "moplab/symfun/schur.hpp"

using namespace moplab;

namespace {
QSym P(std::initializer_list<int> parts, Rational c = Rational(1)) { return QSym::p(Partition(std::vector<int>(parts)), c); }
Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
using G = GaussianRational;

std::vector<G> random_points(std::mt19937_64& rng, int n) {
  std::vector<G> x;
  for (int k = 0; k < n; ++k) x.emplace_back(Rational(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 5) + 1));
  return x;
}
}  // namespace

TEST_CASE("schur in the power-sum basis", "[symfun]") {
  CHECK(schur(Partition{2}) == P({1, 1}, Rational(1, 2)) + P({2}, Rational(1, 2)));
  CHECK(schur(Partition{1, 1}) == P({1, 1}, Rational(1, 2)) - P({2}, Rational(1, 2)));
  CHECK(schur(Partition{2, 1}) == P({1, 1, 1}, Rational(1, 3)) - P({3}, Rational(1, 3)));
  CHECK(schur(Partition{}) == QSym(1));
}

TEST_CASE("Jacobi-Trudi agrees with Murnaghan-Nakayama", "[symfun][oracle]") {
  for (int n = 0; n <= 8; ++n)
    for (auto& r : partitions_of(n)) {
      INFO(r.str());
      CHECK(schur(r) == oracle::schur_mn(r));
      CHECK(schur(r).is_homogeneous());
    }
}

TEST_CASE("skew schur", "[symfun]") {
  CHECK(skew_schur(Partition{2, 1}, Partition{1}) == P({1, 1}));
  CHECK(skew_schur(Partition{2, 1}, Partition{1}) == schur(Partition{2}) + schur(Partition{1, 1}));
  CHECK(skew_schur(Partition{2}, Partition{1}) == P({1}));
  CHECK(skew_schur(Partition{3, 2}, Partition{3, 2}) == QSym(1));
  CHECK_THROWS_AS(skew_schur(Partition{1}, Partition{2}), NotContained);
}

TEST_CASE("skew schur matches two-alphabet evaluation", "[symfun][oracle]") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 5; ++n)
    for (auto& r : partitions_of(n)) {
      auto x = random_points(rng, 3), y = random_points(rng, 3);
      std::vector<G> xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      G lhs = eval_x(schur(r), xy);
      G rhs(0);
      for (auto& q : subpartitions(r)) rhs = rhs + eval_x(skew_schur(r, q), x) * eval_x(schur(q), y);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("special-point evaluations", "[symfun]") {
  ParamScalar n = ParamScalar::symbol("N");
  CHECK(eval_all(schur(Partition{2}), n) == n * (n + 1) / 2);
  CHECK(eval_delta(schur(Partition{2}), 2) == Rational(1, 2));
  CHECK(eval_delta(schur(Partition{1, 1}), 2) == Rational(-1, 2));
  CHECK(eval_delta(schur(Partition{4}), 2) == Rational(1, 8));
  auto f = schur(Partition{1, 1});
  f.set_nvars(3);
  CHECK_THROWS_AS(eval_x(f, std::vector<G>{G(1), G(2)}), ArityMismatch);
}

TEST_CASE("hook formula holds in absolute value", "[symfun][property]") {
  for (int n = 0; n <= 8; ++n)
    for (auto& r : partitions_of(n))
      for (int s = 1; s <= 3; ++s) {
        Rational v = eval_delta(schur(r), s);
        if (v.is_zero()) continue;
        Rational prod(1);
        for (int h : hooks(r)) prod = prod / Rational(bracket(h, s, 0));
        INFO(r.str() << " s=" << s);
        CHECK(abs(v) == prod);
      }
  for (int n = 0; n <= 8; ++n)
    for (auto& r : partitions_of(n)) {
      Rational prod(1);
      for (int h : hooks(r)) prod *= Rational(h);
      CHECK(prod * eval_delta(schur(r), 1) == Rational(1));
    }
}

TEST_CASE("all-N evaluation is a content product", "[symfun][property]") {
  ParamScalar z = ParamScalar::symbol("z");
  for (int n = 0; n <= 8; ++n)
    for (auto& r : partitions_of(n))
      CHECK(eval_all(schur(r), z) == ParamScalar(eval_delta(schur(r), 1)) * xi(r, z));
}

TEST_CASE("schur vanishes with too few variables", "[symfun]") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n)
    for (auto& r : partitions_of(n))
      for (int nv = 1; nv < r.length(); ++nv) CHECK(eval_x(schur(r), random_points(rng, nv)).is_zero());
}

TEST_CASE("jack polynomials", "[symfun]") {
  JackParams<ParamScalar> jp{ParamScalar::symbol("beta")};
  ParamScalar alpha = jp.alpha();
  auto pp = [](std::initializer_list<int> parts) { return SymPoly<ParamScalar>::p(Partition(std::vector<int>(parts))); };
  CHECK(jack(Partition{2}, jp) == pp({2}) + (pp({1, 1}) - pp({2})).scaled(ParamScalar(1) / (alpha + 1)));
  CHECK(jack(Partition{1, 1}, jp) == (pp({1, 1}) - pp({2})).scaled(ParamScalar(Rational(1, 2))));
  JackParams<G> one{G(1)};
  for (int n = 0; n <= 6; ++n)
    for (auto& r : partitions_of(n)) CHECK(jack(r, one) == schur(r).cast<G>());
}

TEST_CASE("jack triangularity in dominance order", "[symfun][property]") {
  JackParams<ParamScalar> jp{ParamScalar::symbol("beta")};
  for (int n = 1; n <= 5; ++n)
    for (auto& r : partitions_of(n)) {
      auto m = to_monomial_basis(jack(r, jp));
      CHECK(m.at(r) == ParamScalar(1));
      for (auto& [mu, c] : m) {
        if (mu == r) continue;
        INFO(r.str() << " " << mu.str());
        CHECK(dominated_by(mu, r));
      }
    }
}

TEST_CASE("skew jack via two alphabets", "[symfun][oracle]") {
  JackParams<G> jp{G(Rational(2, 3))};
  std::mt19937_64 rng(17);
  for (int n = 0; n <= 4; ++n)
    for (auto& r : partitions_of(n)) {
      auto x = random_points(rng, 3), y = random_points(rng, 3);
      std::vector<G> xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      G lhs = eval_x(jack(r, jp), xy);
      G rhs(0);
      for (auto& q : subpartitions(r)) rhs = rhs + eval_x(skew_jack(r, q, jp), x) * eval_x(jack(q, jp), y);
      CHECK(lhs == rhs);
    }
  JackParams<ParamScalar> sym{ParamScalar::symbol("beta")};
  CHECK(skew_jack(Partition{2, 1}, Partition{2, 1}, sym) == SymPoly<ParamScalar>(1));
  JackParams<G> schur_point{G(1)};
  CHECK(skew_jack(Partition{2}, Partition{1}, schur_point) == P({1}).cast<G>());
}

TEST_CASE("hall pairing", "[symfun]") {
  CHECK(hall_pair(schur(Partition{2}), schur(Partition{1, 1})).is_zero());
  CHECK(hall_pair(schur(Partition{2}), schur(Partition{2})) == Rational(1));
  CHECK(hall_pair(P({2}), P({2})) == Rational(2));
  ParamScalar a = ParamScalar::symbol("alpha");
  CHECK(hall_pair(P({2}).cast<ParamScalar>(), P({2}).cast<ParamScalar>(), a) == ParamScalar(2) * a);
}

#include <catch_amalgamated.hpp>

#include "moplab/operators/checks.hpp"

using namespace moplab;

namespace {
using Q = GaussianRational;

using PS = ParamScalar;
PS sym(const char* s) { return PS::symbol(s); }

}  // namespace

TEST_CASE("power-sum operators on small Schur functions", "[operators]") {
  const PS n = sym("N");
  auto w = w2(n);
  CHECK(apply_ps(w, schur(Partition{1})).is_zero());
  auto img = apply_ps(w, schur(Partition{2}));
  CHECK(img == SymPoly<PS>().constant(n * (n + 1)));
  CHECK(apply_ps(l0(n), schur(Partition{2})) == schur(Partition{2}).cast<PS>().scaled(PS(2)));
  CHECK(apply_ps(jacobi_f1(n), schur(Partition{1})) == SymPoly<PS>().constant(n));
  CHECK_THROWS_AS(exp_ps(l0(n), PS(1), schur(Partition{1})), NonNilpotentGrading);
  auto h2 = exp_ps(w, PS(Q(Rational(-1, 2))), schur(Partition{2}));
  CHECK(h2 == schur(Partition{2}).cast<PS>() - SymPoly<PS>().constant(n * (n + 1) / PS(2)));
}

TEST_CASE("power-sum and x-space forms agree", "[operators]") {
  for (int n = 1; n <= 3; ++n) {
    auto r = crosscheck_ps_vs_x<Q>("W2", w2(Q(n)), [](const XPoly<Q>& f, int k) { return w2_x(f, k); }, n, 5);
    CHECK(r.equal);
    auto l = crosscheck_ps_vs_x<Q>("l0", l0(Q(n)), [](const XPoly<Q>& f, int k) { return euler(f, k); }, n, 5);
    CHECK(l.equal);
    auto f1 = crosscheck_ps_vs_x<Q>("F1", jacobi_f1(Q(n)), [](const XPoly<Q>& f, int k) { return sum_partials(f, k); }, n, 5);
    CHECK(f1.equal);
  }
  auto printed = crosscheck_ps_vs_x<Q>("W2-printed", w2(Q(2)), [](const XPoly<Q>& f, int k) { return w2_x_printed(f, k); }, 2, 3);
  INFO(printed.note);
  CHECK_FALSE(printed.equal);
}

TEST_CASE("hermite eigen-equation", "[operators]") {
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(5, n)) {
      auto rep = hermite_eigencheck<Q>(r, n);
      INFO(r.str() << " N=" << n << " " << rep.lhs.str());
      CHECK(rep.equal);
    }
}

TEST_CASE("jacobi eigen-equation", "[operators]") {
  Q u(Rational(1, 3)), v(Rational(2, 5));
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(3, n)) {
      INFO(r.str() << " N=" << n);
      CHECK(jacobi_eigencheck<Q>(r, n, u, v, JacobiOperator::XSpace).equal);
      CHECK(jacobi_eigencheck<Q>(r, n, u, v, JacobiOperator::Derived, W0Reading::FirstDerivative).equal);
      if (r.size() == 0) continue;
      CHECK_FALSE(jacobi_eigencheck<Q>(r, n, u, v, JacobiOperator::Derived, W0Reading::SecondDerivative).equal);
      CHECK_FALSE(jacobi_eigencheck<Q>(r, n, u, v, JacobiOperator::Printed, W0Reading::FirstDerivative).equal);
      CHECK_FALSE(jacobi_eigencheck<Q>(r, n, u, v, JacobiOperator::Printed, W0Reading::SecondDerivative).equal);
    }
  // eigenvalue at R=[1], N=1: (u+v) + 2
  CHECK(jacobi_eigenvalue(Partition{1}, 1, u, v) == Q(Rational(41, 15)));
}

TEST_CASE("jacobi eigen-equation with symbolic parameters", "[operators]") {
  PS u = sym("u"), v = sym("v");
  for (auto r : {Partition{1}, Partition{2}, Partition{1, 1}}) {
    auto rep = jacobi_eigencheck<PS>(r, 2, u, v, JacobiOperator::Derived);
    INFO(r.str() << " " << rep.lhs.str());
    CHECK(rep.equal);
  }
  CHECK(jacobi_eigenvalue(Partition{2, 1}, 2, u, v) == PS(3) * (u + v) + PS(12));
}

TEST_CASE("mp eigen-equation", "[operators]") {
  Q lam(Rational(1, 2)), u(Rational(-1, 3));
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(3, n)) {
      INFO(r.str() << " N=" << n);
      CHECK(mp_eigencheck<Q>(r, n, lam, u, false).equal);
      // the printed prefactor N only survives at N=1
      CHECK(mp_eigencheck<Q>(r, n, lam, u, true).equal == (n == 1 || r.size() == 0));
    }
  PS sl = sym("lambda"), su = sym("u");
  CHECK(mp_eigencheck<PS>(Partition{2, 1}, 2, sl, su, false).equal);
}

TEST_CASE("hermite pieri, differentiation and W-representation", "[operators]") {
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(4, n)) {
      INFO(r.str() << " N=" << n);
      CHECK(pieri_check<Q>(r, n).equal);
      CHECK(differentiation_check<Q>(r, n).equal);
      CHECK(w_representation_check<Q>(r, n, Q(Rational(-1, 2))).equal);
      bool w_kills = apply_ps(w2(Q(n)), schur(r)).is_zero();
      CHECK(w_representation_check<Q>(r, n, Q(Rational(1, 2))).equal == w_kills);
    }
  // p1 H_[1] = H_[2] + H_[1,1] + N at N = 2
  auto rep = pieri_check<Q>(Partition{1}, 2);
  CHECK(rep.equal);
}

TEST_CASE("staircase shapes", "[operators]") {
  for (int n = 2; n <= 4; ++n)
    for (bool plus_one : {false, true}) {
      INFO("N=" << n << " plus_one=" << plus_one);
      CHECK(staircase_check<Q>(n, plus_one, false).equal);
      // the printed sign (-1)^{(N-2)(N+1)/2} breaks at N = 4
      CHECK(staircase_check<Q>(n, plus_one, true).equal == (n < 4));
    }
  CHECK(staircase(3, false) == Partition{2, 1});
  CHECK(staircase(3, true) == Partition{3, 2, 1});
}

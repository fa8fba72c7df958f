#include <catch_amalgamated.hpp>

#include "moplab/detquotient/multivariate.hpp"
#include "moplab/detquotient/orthogonality.hpp"
#include "moplab/models/models.hpp"

using namespace moplab;

namespace {
using G = GaussianRational;
using PS = ParamScalar;

template <class F>
F inverse_pair_entry(const Family<F>& fam, const Partition& r, const Partition& q, int n) {
  auto fwd = multivariate(fam, r, n);
  F acc(0);
  for (auto& [p, c] : fwd.coeffs) acc = acc + c * inverse_expansion(fam, p, n).at(q);
  return acc;
}

std::vector<Family<G>> numeric_families() {
  G u(Rational(1, 3)), v(Rational(5, 2)), lam(Rational(3, 4)), w(Rational(-2, 5));
  return {hermite_family<G>(), jacobi_family(u, v), mp_family(lam, w),
          wilson_family(G(Rational(1, 2)), G(Rational(2, 3)), G(1), G(Rational(5, 4)))};
}
}  // namespace

TEST_CASE("monomial family reproduces schur", "[detquotient]") {
  auto fam = gaussian_monomial_family<G>();
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (auto& r : partitions_of(k, n)) {
        auto e = multivariate(fam, r, n);
        REQUIRE(e.coeffs.size() == 1);
        CHECK(e.at(r) == G(1));
      }
}

TEST_CASE("hermite expansion examples", "[detquotient]") {
  auto h = hermite_family<PS>();
  auto e = multivariate(h, Partition{2}, 2);
  CHECK(e.coeffs.size() == 2);
  CHECK(e.at(Partition{2}) == PS(1));
  CHECK(e.at(Partition{}) == PS(-3));
  auto e1 = multivariate(h, Partition{2}, 1);
  CHECK(e1.at(Partition{2}) == PS(1));
  CHECK(e1.at(Partition{}) == PS(-1));
  auto inv = inverse_expansion(h, Partition{2}, 2);
  CHECK(inv.at(Partition{2}) == PS(1));
  CHECK(inv.at(Partition{}) == PS(3));
  for (int n = 1; n <= 4; ++n) {
    auto one = inverse_expansion(h, Partition{1}, n);
    CHECK(one.coeffs.size() == 1);
    CHECK(one.at(Partition{1}) == PS(1));
  }
  CHECK_THROWS_AS(multivariate(h, Partition{1, 1, 1}, 2), ShapeTooLong);
}

TEST_CASE("andreief expectations", "[detquotient]") {
  auto g = gaussian_monomial_family<PS>();
  CHECK(andreief_expectation(g, Partition{2}, 2) == PS(3));
  for (int n = 1; n <= 3; ++n) CHECK(andreief_expectation(g, Partition{}, n) == PS(1));
  PS u = PS::symbol("u"), v = PS::symbol("v");
  auto b = beta_monomial_family(u, v);
  CHECK(andreief_expectation(b, Partition{1}, 1) == (u + 1) / (u + v + 2));
  CHECK(andreief_expectation(b, Partition{}, 3) == PS(1));
}

TEST_CASE("bilinear and gram examples", "[detquotient]") {
  auto g = gaussian_monomial_family<PS>();
  auto h = hermite_family<PS>();
  CHECK(andreief_bilinear(g, h, Partition{1}, Partition{1}, 1) == PS(1));
  for (int n = 1; n <= 3; ++n) CHECK(andreief_bilinear(h, h, Partition{}, Partition{}, n) == PS(1));
  CHECK(andreief_bilinear(g, h, Partition{2}, Partition{}, 2) == andreief_expectation(g, Partition{2}, 2));
  CHECK(andreief_bilinear(g, h, Partition{2}, Partition{}, 2) == PS(3));
  auto rep = orthogonality_check(h, Partition{2}, Partition{1, 1}, 2);
  CHECK(rep.equal);
  CHECK(rep.lhs.is_zero());
  auto norm = orthogonality_check(h, Partition{1}, Partition{1}, 1);
  CHECK(norm.lhs == PS(1));
}

TEST_CASE("orthogonality for equal sizes in every family", "[detquotient][property]") {
  for (auto& fam : numeric_families())
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        auto shapes = partitions_of(k, n);
        for (auto& r : shapes)
          for (auto& q : shapes) {
            if (r == q) continue;
            INFO(fam.name() << " " << r.str() << " " << q.str() << " N=" << n);
            CHECK(andreief_gram(fam, r, q, n).is_zero());
          }
      }
}

TEST_CASE("inverse-pair identity", "[detquotient][property]") {
  for (auto& fam : numeric_families())
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= (n >= 4 ? 4 : 6); ++k)
        for (auto& r : partitions_of(k, n))
          for (auto& q : subshapes(r, n)) {
            INFO(fam.name() << " " << r.str() << " " << q.str() << " N=" << n);
            CHECK(inverse_pair_entry(fam, r, q, n) == (r == q ? G(1) : G(0)));
          }
}

TEST_CASE("two computations of base expectations agree", "[detquotient][property]") {
  for (auto& fam : numeric_families())
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= 5; ++k)
        for (auto& r : partitions_of(k, n)) {
          INFO(fam.name() << " " << r.str() << " N=" << n);
          G lead(1);
          auto lam0 = shifted_parts(Partition{}, n);
          for (int l : lam0) lead = lead * fam.coeff(l, l);
          G via_inverse = inverse_expansion(fam, r, n).at(Partition{}) * theta_empty(fam, n) * lead;
          CHECK(andreief_expectation(fam, r, n) == via_inverse);
        }
}

TEST_CASE("wilson base is monic in x squared", "[detquotient]") {
  PS a = PS::symbol("a"), b = PS::symbol("b"), c = PS::symbol("c"), d = PS::symbol("d");
  auto w = wilson_theta_family(a, b, c, d);
  CHECK(w.base() == BaseKind::XSquared);
  for (int n = 0; n <= 8; ++n) {
    auto p = w.phi_poly(n);
    CHECK(p.degree() == n);
    CHECK(p.c.back() == PS(1));
  }
  CHECK(w.phi_poly(1).c[0] == a * a);
}

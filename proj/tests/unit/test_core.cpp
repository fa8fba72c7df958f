#include <catch_amalgamated.hpp>

#include <random>

#include "moplab/core/field.hpp"
#include "moplab/core/matrix.hpp"
#include "moplab/core/parse.hpp"
#include "moplab/core/specializer.hpp"
#include "moplab/core/univariate.hpp"

using namespace moplab;

namespace {

ParamScalar sym(const char* s) { return ParamScalar::symbol(s); }

// Random small rational function in u, v, z for property tests.
ParamScalar random_scalar(std::mt19937_64& rng) {
  auto coeff = [&]() { return Rational(static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 4) + 1); };
  auto poly = [&]() {
    ParamScalar p(coeff());
    for (const char* s : {"u", "v", "z"}) {
      if (rng() % 2) p = p + ParamScalar(coeff()) * sym(s);
    }
    if (rng() % 3 == 0) p = p * (sym("u") + ParamScalar(static_cast<int>(rng() % 5)));
    return p;
  };
  ParamScalar num = poly();
  ParamScalar den = poly();
  while (den.is_zero()) den = poly();
  return num / den;
}

}  // namespace

TEST_CASE("rational small path and promotion", "[core]") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  Rational big(1);
  for (int k = 1; k <= 30; ++k) big *= Rational(k);
  CHECK(!big.is_small());
  CHECK(big.str() == "265252859812191058636308480000000");
  Rational back = big / factorial(30);
  CHECK(back.is_one());
  CHECK(back.is_small());
  Rational huge(INT64_MAX);
  CHECK((huge + Rational(1)) - Rational(1) == huge);
  CHECK(Rational(-7, 14) == Rational(-1, 2));
  CHECK(Rational(3, -9) == Rational(-1, 3));
}

TEST_CASE("gaussian rationals satisfy i^2 = -1", "[core]") {
  auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    GaussianRational x(Rational(static_cast<long long>(rng() % 21) - 10, 3), Rational(static_cast<long long>(rng() % 21) - 10, 7));
    GaussianRational y(Rational(static_cast<long long>(rng() % 21) - 10, 5), Rational(static_cast<long long>(rng() % 19) + 1, 2));
    CHECK((x * y) / y == x);
    CHECK(x * (y + i) == x * y + x * i);
  }
}

TEST_CASE("pochhammer is ascending", "[core]") {
  ParamScalar z = sym("z");
  CHECK(pochhammer(z, 0) == ParamScalar(1));
  CHECK(pochhammer(z, 3) == z * (z + 1) * (z + 2));
  ParamScalar lam = sym("lambda");
  CHECK(pochhammer(ParamScalar(2) * lam, 1) == ParamScalar(2) * lam);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(pochhammer(z, m + n) == pochhammer(z, m) * pochhammer(z + ParamScalar(m), n));
  CHECK(pochhammer_signed(z, -2) == ParamScalar(1) / ((z - 1) * (z - 2)));
}

TEST_CASE("frac_equal by cross multiplication", "[core]") {
  ParamScalar u = sym("u"), z = sym("z");
  CHECK(frac_equal(ParamScalar(1) / (ParamScalar(1) - u), u / (u * (ParamScalar(1) - u))));
  CHECK(frac_equal(u / (u - 1), u / (u - 1)));
  CHECK_FALSE(frac_equal((z + 1) / z, z / (z + 1)));
  CHECK(frac_equal((u * u - 1) / (u - 1), u + 1));
}

TEST_CASE("frac_equal respects ring operations (property)", "[core][property]") {
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 60; ++k) {
    ParamScalar x = random_scalar(rng), w = random_scalar(rng);
    ParamScalar y = (x * (sym("v") + 3)) / (sym("v") + 3);
    REQUIRE(frac_equal(x, y));
    CHECK(frac_equal(x + w, y + w));
    CHECK(frac_equal(x * w, y * w));
    CHECK(frac_equal((x + w) * w, x * w + w * w));
    CHECK(frac_equal(x - x, ParamScalar(0)));
  }
}

TEST_CASE("specialize is a ring homomorphism", "[core][property]") {
  std::mt19937_64 rng(99);
  Specializer s(kDefaultSeed, {"u", "v", "z"});
  int tested = 0;
  while (tested < 200) {
    ParamScalar x = random_scalar(rng), y = random_scalar(rng);
    GaussianRational sx, sy, sxy, spy;
    try {
      sx = s.specialize(x);
      sy = s.specialize(y);
      sxy = s.specialize(x * y);
      spy = s.specialize(x + y);
    } catch (const DenominatorVanished&) {
      continue;
    }
    CHECK(sxy == sx * sy);
    CHECK(spy == sx + sy);
    ++tested;
  }
}

TEST_CASE("specializer errors and determinism", "[core]") {
  Specializer s({}, {"z"});
  ParamScalar z = sym("z");
  Specializer fixed(1, {"z"});
  ParamScalar pole = ParamScalar(1) / (ParamScalar(1) - sym("u"));
  std::map<int, GaussianRational> at{{symbol_id("u"), GaussianRational(1)}};
  CHECK_THROWS_AS(pole.specialize(at), DenominatorVanished);
  std::map<int, GaussianRational> at2{{symbol_id("z"), GaussianRational(Rational(3, 2))}};
  CHECK((z + 1).specialize(at2) == GaussianRational(Rational(5, 2)));
  CHECK_THROWS_AS(sym("u").specialize(at2), UnknownParameter);
  Specializer a(42, {"u", "lambda"}), b(42, {"u", "lambda"});
  ParamScalar ul = sym("u") * sym("lambda");
  CHECK(a.specialize(ul) == b.specialize(ul));
  Specializer guarded(5, {"u"});
  guarded.register_denominator(sym("u") - ParamScalar(guarded.value("u")));
  CHECK_FALSE(guarded.specialize(sym("u") - ParamScalar(Rational(0))).is_zero());
}

TEST_CASE("display keeps factored forms", "[core]") {
  ParamScalar a = sym("a"), b = sym("b"), c = sym("c"), d = sym("d");
  ParamScalar z = a + b + c + d;
  ParamScalar m = factored(a + b) * factored(a + c) * factored(a + d) / z;
  CHECK(m.str() == "(a+b)(a+c)(a+d)/(a+b+c+d)");
  CHECK(ParamScalar(-3).str() == "-3");
  CHECK((ParamScalar(1) / (sym("u") * (ParamScalar(1) - sym("u")))).str() == "-1/(u*(u-1))");
}

TEST_CASE("parser round trip", "[core]") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    ParamScalar x = random_scalar(rng);
    ParamScalar num = parse_scalar(poly_str(x.numerator()));
    ParamScalar den = parse_scalar(poly_str(x.denominator()));
    CHECK(frac_equal(num / den, x));
    INFO(x.str());
    CHECK(frac_equal(parse_scalar(x.str()), x));
  }
  CHECK(parse_scalar("(1/2+3*I)*u") == ParamScalar(GaussianRational(Rational(1, 2), Rational(3))) * sym("u"));
  CHECK_THROWS_AS(parse_scalar("a+"), ParseError);
}

TEST_CASE("determinant and triangular inverse", "[core]") {
  Matrix<ParamScalar> m(3, 3);
  ParamScalar u = sym("u");
  int vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m(i, j) = ParamScalar(vals[i][j]);
  CHECK(determinant(m).is_zero());
  m(0, 0) = u;
  CHECK(determinant(m) == u - 2);
  Matrix<ParamScalar> L(3, 3);
  L(0, 0) = 1;
  L(1, 0) = u;
  L(1, 1) = 2;
  L(2, 0) = 3;
  L(2, 1) = u * u;
  L(2, 2) = u + 1;
  auto inv = lower_triangular_inverse(L);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      ParamScalar acc(0);
      for (size_t k = 0; k < 3; ++k) acc += L(i, k) * inv(k, j);
      CHECK(acc == ParamScalar(i == j ? 1 : 0));
    }
}

TEST_CASE("univariate reduction and rational-root factoring", "[core]") {
  ParamScalar z = sym("z");
  ParamScalar x = (z + 2) * (z + 6) * (z + 3) / ((z + 3) * (ParamScalar(2) * z + 1));
  auto r = reduce_univariate(x, symbol_id("z"));
  CHECK(r.den.degree() == 1);
  auto f = factor_linear(r.num);
  CHECK(f.constant == Rational(1, 2));
  CHECK(linear_factors_str(f, "z") == "(z+2)(z+6)");
}

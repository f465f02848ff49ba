#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rrmf/construct.hpp"
#include "rrmf/hodograph.hpp"
#include "rrmf/indicatrix.hpp"
#include "rrmf/regression.hpp"

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

QuatPoly qlin1(const Quaternion& lead) { return QuatPoly{Quaternion(1), lead}; }  // lead*xi + 1

RationalFunction frac(const RealPoly& n, const RealPoly& d) { return reduce_fraction(n, d); }

}  // namespace

TEST_CASE("inner_product_poly") {
  CHECK(inner_product_poly(qlin1(J)).is_zero());
  for (int n = 3; n <= 8; ++n) CHECK(inner_product_poly(make_family_n(n)).is_zero());
  // u = 1, v = xi: -(v'u - u'v) = -1
  CHECK(inner_product_poly(qlin1(I)) == desc({-1}));
  CHECK(han_numerator(qlin1(I)) == desc({1}));
}

TEST_CASE("rotation_indicatrix") {
  CHECK(rotation_indicatrix(QuatPoly{}).is_zero());
  CHECK(rotation_indicatrix(quintic_example1().a) == frac(desc({-1}), desc({1, -4, 5})));
  CHECK(rotation_indicatrix(make_trivial(Quaternion(1, 1, 0, 0), K, {{1, 0}, {2, 1}, {0, 3}})).is_zero());
  const IndicatrixPair p = indicatrix_pair(quintic_example2().a);
  CHECK(p.sigma == norm_poly(quintic_example2().a));
  CHECK(p.reduced == reduce_fraction(p.numerator_inner, p.sigma));
}

TEST_CASE("han_fraction on the three quintics") {
  CHECK(han_fraction(quintic_example1().a) == frac(desc({1}), desc({1, -4, 5})));
  CHECK(han_fraction(quintic_example2().a) ==
        frac(desc({4, -38, 14}), desc({109, -172, 122, -44, 10})));
  CHECK(han_fraction(quintic_example3().a) ==
        frac(desc({8, -32, 35}), desc({4, -32, 109, -180, 125})));
  // left cancellation in example 1
  const QuatPoly a = quintic_example1().a;
  CHECK(gcd_real({han_numerator(a), norm_poly(a)}) ==
        make_monic(desc({441, 2646, 6825})));
  // right cancellation in example 3
  const Certificate c3 = quintic_example3().certificate;
  const RealPoly ab = c3.a * c3.b.derivative() - c3.a.derivative() * c3.b;
  CHECK(gcd_real({ab, c3.a * c3.a + c3.b * c3.b}) == make_monic(desc({4, -16, 25})));
  CHECK(han_fraction(c3.a, c3.b) == han_fraction(quintic_example3().a));
}

TEST_CASE("verify_han") {
  CHECK(verify_han(quintic_example1().a, desc({1, -2}), desc({-1})));
  CHECK(verify_han(quintic_example3().a, desc({4, -24, 51, -38}), desc({-8, 32, -41})));
  CHECK(verify_han(quintic_example2().a, desc({27, -22, 10}), desc({-19, 14, 0})));
  CHECK_FALSE(verify_han(quintic_example2().a, desc({1}), RealPoly{}));
  CHECK_FALSE(verify_han(quintic_example1(true).a, desc({1, -2}), desc({-1})));
  CHECK_THROWS_AS(verify_han(quintic_example1().a, desc({1, -1}), desc({1, -1})), PreconditionError);
}

TEST_CASE("omega1") {
  CHECK(omega1(quintic_example2().a) ==
        frac(desc({8, -76, 28}), desc({109, -172, 122, -44, 10})));
  CHECK(omega1(catalog_cubic()).is_zero());
  CHECK(omega1(catalog_quartic_a()).is_zero());
  CHECK(omega1(qlin1(I)) == frac(desc({2}), desc({1, 0, 1})));
}

TEST_CASE("rho and eta") {
  const RhoEta e2 = rho_eta(quintic_example2().a);
  CHECK(e2.divisible);
  CHECK(divides(norm_poly(quintic_example2().a), e2.rho));
  CHECK(divides(norm_poly(quintic_example2().a), e2.eta));
  // i xi + 1 is complex, so it lies in F with gamma = 1 + i xi and the criterion holds
  CHECK(rho_eta(qlin1(I)).divisible);

  gen::Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const QuatPoly a = gen::quat_poly(rng, 1 + t % 3);
    if (a.is_zero()) continue;
    const RhoEta re = rho_eta(a);
    const QuatPoly d = a.derivative();
    CHECK(re.rho + re.eta == norm_poly(a) * norm_poly(d));
  }
}

TEST_CASE("indicatrix product residual") {
  gen::Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const QuatPoly b = gen::quat_poly(rng, 1 + t % 3);
    const QuatPoly a = gen::quat_poly(rng, 1 + (t / 3) % 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(indicatrix_product_residual(b, a).is_zero());
  }
  const QuatPoly a = quintic_example2().a;
  CHECK(indicatrix_product_residual(QuatPoly{Quaternion(1)}, a).is_zero());
  // complex right factor: indicatrices add
  const ComplexPoly g{Complex(2, -1), Complex(1, 3)};
  CHECK(indicatrix_product_residual(a, to_quat(g)).is_zero());
  CHECK(rotation_indicatrix(a * to_quat(g)) ==
        rotation_indicatrix(a) + rotation_indicatrix(to_quat(g)));
}

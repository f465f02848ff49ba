#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rrmf/construct.hpp"
#include "rrmf/poly.hpp"
#include "rrmf/regression.hpp"

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
const Complex CI{0, 1};

// xi + c
ComplexPoly lin(const Complex& c) { return ComplexPoly{c, Complex(1)}; }
QuatPoly qlin(const Quaternion& c) { return QuatPoly{c, Quaternion(1)}; }

}  // namespace

TEST_CASE("derivative") {
  CHECK(desc({1, -4, 5}).derivative() == desc({2, -4}));
  CHECK(desc({7}).derivative().is_zero());
  const QuatPoly d = make_family_n(3).derivative();
  CHECK(d == QuatPoly{J, Scalar(6) * K, Scalar(3) * I});
}

TEST_CASE("quat_poly_product") {
  CHECK(qlin(I) * qlin(-I) == to_quat(desc({1, 0, 1})));
  CHECK(QuatPoly{J} * qlin(I) == QuatPoly{-K, J});
  CHECK(quat_poly_product(qlin(J), qlin(I)) == qlin(J) * qlin(I));
}

TEST_CASE("right multiplication by a complex polynomial") {
  // (alpha + beta j) gamma = alpha gamma + (beta gamma*) j
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const QuatPoly a = gen::quat_poly(rng, 2);
    const ComplexPoly g = gen::coprime_complex(rng, 2);
    const auto [alpha, beta] = split(a);
    CHECK(a * to_quat(g) == join(alpha * g, beta * conjugate(g)));
  }
}

TEST_CASE("conjugation") {
  const QuatPoly a = from_components(desc({1, 2}), desc({3}), desc({-1, 0}), desc({5, 5}));
  CHECK(quat_poly_conjugate(a) == from_components(desc({1, 2}), -desc({3}), -desc({-1, 0}), -desc({5, 5})));
  CHECK(quat_poly_conjugate(to_quat(desc({1, 4, 4}))) == to_quat(desc({1, 4, 4})));
  CHECK(quat_poly_conjugate(qlin(I) * qlin(J)) == qlin(-J) * qlin(-I));
}

TEST_CASE("norm_poly") {
  CHECK(norm_poly(quintic_example1().a) ==
        (desc({21, 126, 325}) * desc({1, -4, 5})).scaled(Scalar(21)));
  CHECK(norm_poly(QuatPoly{Quaternion(1)}) == desc({1}));
  CHECK(norm_poly(quintic_example2().a) == desc({1090, -1720, 1220, -440, 100}));
}

TEST_CASE("gcd_real") {
  const QuatComponents c = components(quintic_example1().a);
  const RealPoly xp = c.u * c.u + c.v * c.v - c.p * c.p - c.q * c.q;
  const RealPoly yp = (c.u * c.q + c.v * c.p).scaled(Scalar(2));
  const RealPoly zp = (c.v * c.q - c.u * c.p).scaled(Scalar(2));
  CHECK(gcd_real({xp, yp, zp}).is_one());
  CHECK(gcd_real({desc({3, 6}), RealPoly{}}) == desc({1, 2}));
  const RealPoly q = desc({1, -4, 5});
  CHECK(gcd_real({q * desc({3, 1}), q * desc({1, 2}), q.scaled(Scalar(7))}) == q);
  CHECK(gcd_real({desc({1, 0, -2}), desc({1, 0})}).is_one());
  CHECK_THROWS_AS(gcd_real({RealPoly{}, RealPoly{}}), PreconditionError);
}

TEST_CASE("gcd_complex") {
  CHECK(gcd_complex({lin(CI), lin(-CI)}).is_one());
  CHECK(gcd_complex({lin(CI) * lin(Complex(-2)), lin(CI)}) == lin(CI));
  gen::Rng rng(5);
  const ComplexPoly chi{Complex(1, 1), Complex(0), Complex(1)};  // xi^2 + (1+i)
  for (int t = 0; t < 30; ++t) {
    const ComplexPoly a = gen::coprime_complex(rng, 2), b = gen::coprime_complex(rng, 2);
    if (!gcd_complex({a, b}).is_one()) continue;
    const ComplexPoly g = gcd_complex({a * chi, b * chi});
    CHECK(g == chi);
    CHECK(divides(g, a * chi));
    CHECK(g.lead().is_one());
  }
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(to_complex(desc({1, 0, 1})), lin(CI)) == lin(-CI));
  CHECK_THROWS_AS(exact_divide(desc({1, 0, 1}), desc({1, 1})), InexactDivision);
  gen::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const QuatPoly a = gen::quat_poly(rng, 3);
    const QuatPoly chi = to_quat(gen::monic_complex(rng, 2));
    CHECK(exact_divide(a * chi, chi) == a);
  }
}

TEST_CASE("reduce_fraction") {
  const RationalFunction r = reduce_fraction(desc({2, 0}), desc({4, 0, 0}));
  CHECK(r.numerator == RealPoly{Scalar(1, 2)});
  CHECK(r.denominator == desc({1, 0}));
  const RationalFunction z = reduce_fraction(RealPoly{}, desc({3, 1}));
  CHECK(z.is_zero());
  CHECK(z.denominator == desc({1}));
  CHECK_THROWS_AS(reduce_fraction(desc({1}), RealPoly{}), PreconditionError);
}

TEST_CASE("component split round trip and norms") {
  gen::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const QuatPoly a = gen::quat_poly(rng, 3), b = gen::quat_poly(rng, 2);
    const QuatComponents c = components(a);
    const auto [alpha, beta] = split(a);
    CHECK(real_part(alpha) == c.u);
    CHECK(imag_part(alpha) == c.v);
    CHECK(real_part(beta) == c.p);
    CHECK(imag_part(beta) == c.q);
    CHECK(join(alpha, beta) == a);
    CHECK(norm_poly(a * b) == norm_poly(a) * norm_poly(b));
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

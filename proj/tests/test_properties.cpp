#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rrmf/classify.hpp"
#include "rrmf/construct.hpp"
#include "rrmf/frames.hpp"
#include "rrmf/hodograph.hpp"
#include "rrmf/indicatrix.hpp"
#include "rrmf/regression.hpp"

// Pointwise oracles: evaluate A at rational points and compare against plain
// quaternion arithmetic, independent of the polynomial identities used inside
// the library.

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i();
constexpr int kCount = 200;

Scalar at(const RationalFunction& f, const Scalar& t) { return f.numerator(t) / f.denominator(t); }

Scalar point(gen::Rng& rng) { return Scalar(gen::integer(rng, -9, 9), gen::integer(rng, 1, 5)); }

QuatPoly random_a(gen::Rng& rng) {
  for (;;) {
    QuatPoly a = gen::quat_poly(rng, static_cast<int>(gen::integer(rng, 1, 3)));
    if (!a.is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("hodograph equals A i A* pointwise") {
  gen::Rng rng(101);
  for (int s = 0; s < kCount; ++s) {
    const QuatPoly a = random_a(rng);
    const Hodograph h = hodograph_of(a);
    const Scalar t = point(rng);
    const Quaternion q = a(t);
    const Quaternion r = q * I * q.conj();
    CHECK(r.w.is_zero());
    CHECK(h.xprime(t) == r.x);
    CHECK(h.yprime(t) == r.y);
    CHECK(h.zprime(t) == r.z);
    CHECK(h.sigma(t) == q.norm2());
  }
}

TEST_CASE("rotation indicatrix pointwise") {
  gen::Rng rng(102);
  for (int s = 0; s < kCount; ++s) {
    const QuatPoly a = random_a(rng);
    const Scalar t = point(rng);
    const Quaternion q = a(t);
    if (q.is_zero()) continue;
    const Scalar expect = quat_inner(a.derivative()(t) * I, q) / q.norm2();
    CHECK(at(rotation_indicatrix(a), t) == expect);
    CHECK(at(han_fraction(a), t) == -expect);
  }
}

TEST_CASE("indicatrix of a product with a complex factor") {
  gen::Rng rng(103);
  for (int s = 0; s < kCount; ++s) {
    const QuatPoly a = random_a(rng);
    const ComplexPoly g = gen::coprime_complex(rng, static_cast<int>(gen::integer(rng, 1, 2)));
    const Scalar t = point(rng);
    CHECK(at(rotation_indicatrix(a * to_quat(g)), t) ==
          at(rotation_indicatrix(a), t) + at(rotation_indicatrix(to_quat(g)), t));
    CHECK(rotation_indicatrix(to_quat(conjugate(g))) == -rotation_indicatrix(to_quat(g)));
  }
}

TEST_CASE("c_m are the coefficients of <A, A'i>") {
  gen::Rng rng(104);
  for (int s = 0; s < kCount; ++s) {
    const QuatPoly a = random_a(rng);
    const CmList c = c_coefficients(a);
    const Scalar t = point(rng);
    Scalar sum, pw(1);
    for (const auto& v : c.values) {
      sum += v * pw;
      pw *= t;
    }
    CHECK(sum == quat_inner(a(t), a.derivative()(t) * I));
    CHECK(inductive_step_holds(a));
  }
}

TEST_CASE("F0 is invariant under left constant factors") {
  gen::Rng rng(105);
  for (int s = 0; s < kCount / 2; ++s) {
    const QuatPoly b = gen::any_F0(rng);
    const Quaternion c = gen::nonzero_quaternion(rng);
    CHECK(is_in_F0(b.left_mul(c)));
  }
}

TEST_CASE("trivial, F0 and planar") {
  gen::Rng rng(106);
  for (int s = 0; s < 100; ++s) {
    const QuatPoly t = gen::trivial(rng, static_cast<int>(gen::integer(rng, 1, 4)));
    CHECK(is_in_F0(t));
    CHECK(is_trivial(t));
    CHECK(is_planar(t));
    CHECK(core_of(t).chi.is_one());

    const QuatPoly n = gen::nontrivial_F0(rng);
    CHECK(is_in_F0(n));
    CHECK_FALSE(is_trivial(n));
    CHECK_FALSE(is_planar(n));
  }
}

TEST_CASE("reduce_to_F0 undoes right multiplication") {
  gen::Rng rng(107);
  for (int s = 0; s < 100; ++s) {
    const gen::FGammaSample x = gen::f_gamma(rng);
    const F0Reduction r = reduce_to_F0(x.a, x.gamma);
    CHECK(r.in_F0);
    CHECK(r.reduced == x.b0);
  }
}

TEST_CASE("RMF of an F_gamma element is the ERF of its reduction") {
  gen::Rng rng(108);
  for (int s = 0; s < 25; ++s) {
    const gen::FGammaSample x = gen::f_gamma(rng);
    const Certificate c = Certificate::from_gamma(x.gamma);
    const SymbolicFrame r = rmf_symbolic(x.a, c.a, c.b);
    CHECK(r.f == erf_symbolic(x.b0).f);
    CHECK(is_orthonormal(r));
    CHECK(twist_numerator(r).is_zero());
  }
}

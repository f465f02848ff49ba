#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rrmf/hodograph.hpp"
#include "rrmf/regression.hpp"

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
const Scalar R15 = Scalar::sqrt_of(15);

QuatPoly qlin(const Quaternion& c) { return QuatPoly{c, Quaternion(1)}; }

}  // namespace

TEST_CASE("hodograph of example 1") {
  const Hodograph h = hodograph_of(quintic_example1().a);
  CHECK(h.xprime == desc({441, 882, -8610, 7434, 14141}));
  CHECK(h.yprime == desc({-1764, 420, 12012, -22412}));
  CHECK(h.zprime == desc({-1764, 1428, 14700, -21500}));
  CHECK(h.sigma == (desc({21, 126, 325}) * desc({1, -4, 5})).scaled(Scalar(21)));
}

TEST_CASE("hodograph of example 2") {
  const Hodograph h = hodograph_of(quintic_example2().a);
  CHECK(h.xprime == desc({-270, 40, 420, -440, 100}));
  CHECK(h.yprime == desc({960, -1080, -120, 240, 0}));
  CHECK(h.zprime == desc({440, -1880, 1560, -320, 0}));
  CHECK(h.sigma == desc({1090, -1720, 1220, -440, 100}));
}

TEST_CASE("hodograph of example 3 over Q(sqrt 15)") {
  const Hodograph h = hodograph_of(quintic_example3().a);
  CHECK(h.xprime == desc({32, -256, 872, -1440, 865}).scaled(Scalar(10)));
  CHECK(h.yprime == desc({-1, 2}).scaled(Scalar::sqrt_of(15, 480)));
  CHECK(h.zprime == desc({-8, 32, -29}).scaled(Scalar::sqrt_of(15, 30)));
  CHECK(h.sigma == (desc({4, -16, 25}) * desc({1, -4, 5})).scaled(Scalar(80)));
  CHECK(h.yprime.coeff(0) == Scalar(960) * R15);
}

TEST_CASE("hodograph of a constant") {
  const Hodograph h = hodograph_of(QuatPoly{Quaternion(1)});
  CHECK(h.xprime == desc({1}));
  CHECK(h.yprime.is_zero());
  CHECK(h.zprime.is_zero());
  CHECK(h.sigma == desc({1}));
}

TEST_CASE("sandwich with i is the hodograph") {
  const QuatPoly a = quintic_example2().a;
  const VectorPoly s = sandwich(a, I);
  const Hodograph h = hodograph_of(a);
  CHECK(s.x == h.xprime);
  CHECK(s.y == h.yprime);
  CHECK(s.z == h.zprime);
}

TEST_CASE("primitive hodographs") {
  CHECK(is_primitive(quintic_example2().a));
  CHECK_FALSE(is_primitive(QuatPoly{Quaternion(1, 0, 1, 0)} * qlin(I)));
  CHECK(is_primitive(QuatPoly{Quaternion(1)}));
  CHECK(is_primitive(quintic_example1().a));
}

TEST_CASE("core_of") {
  const CoreDecomposition p = core_of(quintic_example2().a);
  CHECK(p.core == quintic_example2().a);
  CHECK(p.chi.is_one());

  const QuatPoly c = catalog_cubic();
  const CoreDecomposition d = core_of(c * qlin(I));
  CHECK(d.core == c);
  CHECK(d.chi == ComplexPoly{Complex(0, 1), Complex(1)});

  const QuatPoly k{Quaternion(2, 1, -1, 3)};
  CHECK(core_of(k).core == k);
  CHECK(core_of(k).chi.is_one());

  const ComplexPoly chi{Complex(1, 1), Complex(0), Complex(1)};
  const CoreDecomposition e = core_of(quintic_example2().a * to_quat(chi));
  CHECK(e.core == quintic_example2().a);
  CHECK(e.chi == chi);
}

TEST_CASE("integrate") {
  const CurvePosition line = integrate(Hodograph{desc({1}), {}, {}, desc({1})});
  CHECK(line.x == desc({1, 0}));
  CHECK(line.arclen == desc({1, 0}));

  const CurvePosition sq = integrate(Hodograph{desc({2, 0}), {}, {}, desc({2, 0})});
  CHECK(sq.x == desc({1, 0, 0}));
  CHECK(sq.arclen == desc({1, 0, 0}));

  const Hodograph h = hodograph_of(quintic_example2().a);
  const CurvePosition r = integrate(h);
  CHECK(r.x == desc({-54, 10, 140, -220, 100, 0}));
  CHECK(r.x.derivative() == h.xprime);
  CHECK(r.y.derivative() == h.yprime);
  CHECK(r.z.derivative() == h.zprime);
  CHECK(r.arclen.derivative() == h.sigma);
  CHECK(r.y(Scalar(0)).is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rrmf/classify.hpp"
#include "rrmf/construct.hpp"
#include "rrmf/hodograph.hpp"
#include "rrmf/indicatrix.hpp"
#include "rrmf/regression.hpp"

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

QuatPoly qlin1(const Quaternion& lead) { return QuatPoly{Quaternion(1), lead}; }
ComplexPoly clin(const Complex& c) { return ComplexPoly{c, Complex(1)}; }

std::vector<Scalar> zeros(std::size_t n) { return std::vector<Scalar>(n); }

// generic quadratic with a non-planar hodograph and no certificate
const QuatPoly kGeneric{Quaternion(1, 0, 1, 0), Quaternion(2, 1, 0, 1), Quaternion(0, 1, -1, 2)};

}  // namespace

TEST_CASE("c_coefficients") {
  CHECK(c_coefficients(qlin1(J)).values == zeros(1));
  CHECK(c_coefficients(catalog_cubic()).values == zeros(5));
  CHECK(c_coefficients(qlin1(I)).values == std::vector<Scalar>{Scalar(-1)});
  CHECK(c_coefficients(catalog_quartic_a()).all_zero());
  const CmList c = c_coefficients(quintic_example2().a);
  CHECK(c.values.size() == 3);
  CHECK_FALSE(c.all_zero());
  CHECK(inductive_step_holds(quintic_example2().a));
  CHECK(inductive_step_holds(catalog_quartic_b()));
}

TEST_CASE("is_in_F0") {
  for (int n = 3; n <= 8; ++n) CHECK(is_in_F0(make_family_n(n)));
  CHECK(is_in_F0(catalog_quartic_b()));
  CHECK(is_in_F0(catalog_quartic_a()));
  CHECK_FALSE(is_in_F0(qlin1(I)));
  CHECK_FALSE(is_in_F0(quintic_example2().a));
}

TEST_CASE("is_trivial") {
  const auto w = is_trivial(qlin1(K));
  REQUIRE(w);
  CHECK(w->left_factor == Quaternion(1));
  CHECK(w->direction.w.is_zero());
  CHECK(w->direction.x.is_zero());
  CHECK(w->direction.y.is_zero());
  CHECK(is_trivial(catalog_cubic()) == std::nullopt);
  // 1, k, j span three dimensions, so no single direction u works
  CHECK(is_trivial(QuatPoly{Quaternion(1), K, J}.left_mul(Quaternion(1, 1, 0, 0))) == std::nullopt);

  const Quaternion c(1, 1, 0, 0);
  const QuatPoly a = QuatPoly{Quaternion(1), K, Scalar(2) * K}.left_mul(c);
  const auto t = is_trivial(a);
  REQUIRE(t);
  CHECK(t->direction.x.is_zero());
  CHECK(t->reduced.left_mul(t->left_factor) == a);
  for (const auto& q : t->reduced.coefficients()) {
    // every coefficient lies in R + R u
    CHECK(cross(q, t->direction).is_zero());
  }
}

TEST_CASE("planarity") {
  CHECK(is_planar(qlin1(J)));
  const Hodograph h = hodograph_of(qlin1(J));
  CHECK(h.xprime == desc({-1, 0, 1}));
  CHECK(h.yprime.is_zero());
  CHECK(h.zprime == desc({-2, 0}));
  CHECK_FALSE(is_planar(quintic_example2().a));
  CHECK(is_planar(QuatPoly{Quaternion(1, 2, 3, 4)}));
  CHECK(hodograph_span_rank(QuatPoly{Quaternion(1, 2, 3, 4)}) == 1);
  CHECK(hodograph_span_rank(quintic_example2().a) == 3);
}

TEST_CASE("gcd_H_with_complex") {
  CHECK(gcd_H_with_complex(quintic_example2().a, clin(Complex(3, 1))).is_one());
  CHECK(gcd_H_with_complex(quintic_example2().a, ComplexPoly{Complex(1)}).is_one());
  const ComplexPoly chi = clin(Complex(1, -2));
  const QuatPoly a = quintic_example2().a * to_quat(chi);
  CHECK(gcd_H_with_complex(a, chi * clin(Complex(5, 0))) == chi);
}

TEST_CASE("reduce_to_F0") {
  const QuatPoly b0 = catalog_cubic();
  const ComplexPoly g = clin(Complex(0, 1));
  const F0Reduction r = reduce_to_F0(b0 * to_quat(g), g);
  CHECK(r.reduced == b0);
  CHECK(r.in_F0);
  CHECK(r.gcd == g);

  const QuatPoly a2 = quintic_example2().a;
  const F0Reduction same = reduce_to_F0(a2, ComplexPoly{Complex(1)});
  CHECK(same.reduced == a2);
  CHECK_FALSE(same.in_F0);

  const NamedExample e1 = quintic_example1();
  CHECK(reduce_to_F0(e1.a, e1.certificate.gamma()).in_F0);
}

TEST_CASE("f_membership") {
  const NamedExample e3 = quintic_example3();
  CHECK(f_membership(e3.a, e3.certificate).status == Membership::ProvenInF);
  CHECK(f_membership(catalog_cubic(), std::nullopt).status == Membership::ProvenInF);
  CHECK(f_membership(quintic_example2().a, std::nullopt).status == Membership::ProvenInF);  // rho/eta
  CHECK(f_membership(kGeneric, std::nullopt).status == Membership::Unknown);
  CHECK_FALSE(rho_eta(kGeneric).divisible);
  CHECK_FALSE(is_planar(kGeneric));
  CHECK(f_membership(quintic_example2().a, Certificate{desc({1}), {}}).status ==
        Membership::CertificateRejected);
  CHECK(to_string(Membership::Unknown) == "unknown");
}

TEST_CASE("search_gamma") {
  SearchOptions opts;
  opts.max_degree = 1;
  const auto c1 = search_gamma(quintic_example1().a, opts);
  REQUIRE(c1);
  CHECK(c1->a == desc({1, -2}));
  CHECK(c1->b == desc({-1}));

  opts.max_degree = 2;
  const auto c2 = search_gamma(quintic_example2().a, opts);
  REQUIRE(c2);
  CHECK(c2->gamma().degree() == 2);
  CHECK(c2->gamma().lead().is_one());
  CHECK(verify_han(quintic_example2().a, c2->a, c2->b));

  opts.max_degree = 0;
  const auto c0 = search_gamma(catalog_cubic(), opts);
  REQUIRE(c0);
  CHECK(c0->a == desc({1}));
  CHECK(c0->b.is_zero());

  opts.max_degree = 2;
  CHECK(search_gamma(kGeneric, opts) == std::nullopt);
}

TEST_CASE("classify") {
  const Classification c = classify(catalog_cubic(), std::nullopt);
  CHECK(c.in_F0);
  CHECK_FALSE(c.trivial_witness);
  CHECK_FALSE(c.planar);
  CHECK(c.primitive);

  const Classification t = classify(qlin1(J), std::nullopt);
  CHECK(t.in_F0);
  CHECK(t.trivial_witness);
  CHECK(t.planar);

  const NamedExample e2 = quintic_example2();
  const Classification d = classify(e2.a, e2.certificate);
  CHECK(d.in_F.status == Membership::ProvenInF);
  CHECK_FALSE(d.planar);
  CHECK_FALSE(d.in_F0);
}

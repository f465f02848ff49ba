#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rrmf/errors.hpp"
#include "rrmf/quaternion.hpp"
#include "rrmf/scalar.hpp"

using namespace rrmf;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

Quaternion rand_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  return {Scalar(d(rng), 1 + std::abs(d(rng))), d(rng), d(rng), Scalar(d(rng), 3)};
}

}  // namespace

TEST_CASE("scalar normal form and text") {
  CHECK(Scalar(6, -4) == Scalar(-3, 2));
  CHECK(Scalar(6, -4).to_string() == "-3/2");
  CHECK(Scalar::sqrt_of(15, 3).to_string() == "3*sqrt(15)");
  CHECK(Scalar::parse("1/2+3*sqrt(15)", 15) == Scalar(1, 2) + Scalar::sqrt_of(15, 3));
  CHECK(Scalar::parse("-sqrt(2)", 2) == -Scalar::sqrt_of(2));
  CHECK(Scalar::parse("  7 ", 0) == Scalar(7));
  CHECK_THROWS_AS(Scalar::parse("sqrt(3)", 15), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0", 0), std::exception);
  CHECK_THROWS_AS(Scalar::parse("x", 0), ParseError);
  for (const char* t : {"0", "-5/7", "1/2+3/4*sqrt(15)", "-sqrt(15)", "2-1/3*sqrt(15)"}) {
    CHECK(Scalar::parse(Scalar::parse(t, 15).to_string(), 15) == Scalar::parse(t, 15));
  }
}

TEST_CASE("surd bases") {
  CHECK(is_valid_surd_base(0));
  CHECK(is_valid_surd_base(15));
  CHECK_FALSE(is_valid_surd_base(1));
  CHECK_FALSE(is_valid_surd_base(12));
  const Scalar r15 = Scalar::sqrt_of(15), r2 = Scalar::sqrt_of(2);
  CHECK(r15 * r15 == Scalar(15));
  CHECK((r15 + 1) * Scalar(3) == Scalar(3) + Scalar::sqrt_of(15, 3));
  CHECK_THROWS_AS(r15 + r2, SurdMismatch);
  CHECK_THROWS_AS(r15 * r2, SurdMismatch);
  CHECK((Scalar(1) + r15).inverse() * (Scalar(1) + r15) == Scalar(1));
}

TEST_CASE("exact sign in Q(sqrt(d))") {
  CHECK(Scalar(4).sign() == 1);
  CHECK((Scalar(4) - Scalar::sqrt_of(15)).sign() == 1);    // 16 > 15
  CHECK((Scalar(3) - Scalar::sqrt_of(15)).sign() == -1);   // 9 < 15
  CHECK((Scalar::sqrt_of(15) - Scalar::sqrt_of(15)).sign() == 0);
  CHECK(Scalar(-1) < Scalar::sqrt_of(2, Scalar(1, 100).rational_part()));
}

TEST_CASE("quat_product") {
  CHECK(I * J == K);
  CHECK(J * I == -K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(I * I == Quaternion(-1));
  CHECK(Quaternion(1, 0, 1, 0) * Quaternion(1, 0, -1, 0) == Quaternion(2));
}

TEST_CASE("quat_inner and normalized_component") {
  CHECK(quat_inner(I, I) == Scalar(1));
  CHECK(quat_inner(K, J * I) == Scalar(-1));
  CHECK(quat_inner(Quaternion(1, 0, 2, 0), Quaternion(0, 3, 0, 1)).is_zero());
  CHECK(normalized_component(Scalar(2) * I, I) == Scalar(2));
  CHECK(normalized_component(I, J).is_zero());
  CHECK(normalized_component(Quaternion(1, 0, 1, 0), Quaternion(1, 0, -1, 0)).is_zero());
  CHECK_THROWS_AS(normalized_component(I, Quaternion()), PreconditionError);
}

TEST_CASE("quaternion identities on random inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = rand_quat(rng), q = rand_quat(rng), u = rand_quat(rng);
    CHECK(p.conj().conj() == p);
    CHECK((p * q).norm2() == p.norm2() * q.norm2());
    CHECK((p * q).conj() == q.conj() * p.conj());
    // unnormalised orthogonal-transformation law
    CHECK(quat_inner(u * p, u * q) == quat_inner(p, q) * u.norm2());
    CHECK(quat_inner(p * u, q * u) == quat_inner(p, q) * u.norm2());
    CHECK((p * q) * u == p * (q * u));
    if (!p.is_zero()) CHECK(p * p.inverse() == Quaternion(1));
    CHECK(p.norm2().sign() >= 0);
  }
}

TEST_CASE("cross product of vector parts") {
  CHECK(cross(I, J) == K);
  CHECK(cross(J, I) == -K);
  CHECK(cross(Quaternion(5, 1, 0, 0), I).is_zero());
}

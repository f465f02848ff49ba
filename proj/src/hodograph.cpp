#include "rrmf/hodograph.hpp"

namespace rrmf {

namespace {

void require_nonzero(const QuatPoly& a, const char* op) {
  if (a.is_zero()) throw PreconditionError(std::string(op) + ": A must be nonzero");
}

}  // namespace

Hodograph hodograph_of(const QuatPoly& a) {
  require_nonzero(a, "hodograph_of");
  const auto [u, v, p, q] = components(a);
  const Scalar two(2);
  Hodograph h{u * u + v * v - p * p - q * q, (u * q + v * p).scaled(two), (v * q - u * p).scaled(two),
              u * u + v * v + p * p + q * q};
  if (h.xprime * h.xprime + h.yprime * h.yprime + h.zprime * h.zprime != h.sigma * h.sigma) {
    throw InternalError("hodograph_of: Pythagorean identity failed");
  }
  return h;
}

VectorPoly sandwich(const QuatPoly& a, const Quaternion& x) {
  const QuatPoly prod = right_mul(a, x) * quat_poly_conjugate(a);
  const auto c = components(prod);
  if (x.is_pure() && !c.u.is_zero()) throw InternalError("sandwich: A X A* has a scalar part");
  return {c.v, c.p, c.q};
}

bool is_primitive(const QuatPoly& a) {
  require_nonzero(a, "is_primitive");
  const auto [alpha, beta] = split(a);
  const bool by_complex = gcd_complex({alpha, conjugate(beta)}).degree() == 0;
  const Hodograph h = hodograph_of(a);
  const bool by_real = gcd_real({h.xprime, h.yprime, h.zprime}).degree() == 0;
  if (by_complex != by_real) throw InternalError("is_primitive: complex and real gcd tests disagree");
  return by_complex;
}

CoreDecomposition core_of(const QuatPoly& a) {
  require_nonzero(a, "core_of");
  const auto [alpha, beta] = split(a);
  ComplexPoly chi = gcd_complex({alpha, conjugate(beta)});
  QuatPoly core = exact_divide(a, to_quat(chi));
  return {std::move(core), std::move(chi)};
}

CurvePosition integrate(const Hodograph& h) {
  return {antiderivative(h.xprime), antiderivative(h.yprime), antiderivative(h.zprime),
          antiderivative(h.sigma)};
}

}  // namespace rrmf

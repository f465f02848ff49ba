#ifndef RRMF_HODOGRAPH_HPP
#define RRMF_HODOGRAPH_HPP

#include "rrmf/poly.hpp"

namespace rrmf {

/// r'(xi) = A i A* together with the parametric speed sigma = |A|^2.
struct Hodograph {
  RealPoly xprime;
  RealPoly yprime;
  RealPoly zprime;
  RealPoly sigma;
};

/// Antiderivatives of a hodograph, normalised so r(0) = 0 and s(0) = 0.
struct CurvePosition {
  RealPoly x;
  RealPoly y;
  RealPoly z;
  RealPoly arclen;
};

/// The PH hodograph generated by A:
///   x' = u^2+v^2-p^2-q^2,  y' = 2(uq+vp),  z' = 2(vq-up),  sigma = u^2+v^2+p^2+q^2.
/// The Pythagorean identity is checked before returning.
Hodograph hodograph_of(const QuatPoly& a);

/// Vector part of A X A* for a constant quaternion X, as three real
/// polynomials (the scalar part vanishes when X is pure).
struct VectorPoly {
  RealPoly x, y, z;
  friend bool operator==(const VectorPoly&, const VectorPoly&) = default;
};
VectorPoly sandwich(const QuatPoly& a, const Quaternion& x);

/// Primitive hodograph test: gcd_C(alpha, beta*) = 1, cross-checked against
/// gcd_R(x', y', z') = 1.
bool is_primitive(const QuatPoly& a);

struct CoreDecomposition {
  QuatPoly core;
  ComplexPoly chi;  // monic; A = core * chi
};

/// chi = gcd_C(alpha, beta*) and core = A chi^{-1} (exact right division).
CoreDecomposition core_of(const QuatPoly& a);

CurvePosition integrate(const Hodograph& h);

}  // namespace rrmf

#endif  // RRMF_HODOGRAPH_HPP

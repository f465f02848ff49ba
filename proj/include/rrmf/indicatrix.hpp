#ifndef RRMF_INDICATRIX_HPP
#define RRMF_INDICATRIX_HPP

#include "rrmf/poly.hpp"

namespace rrmf {

/// <A'i, A> = -(v'u - u'v - q'p + p'q), computed from the components.
RealPoly inner_product_poly(const QuatPoly& a);

/// Numerator of the RRMF condition, uv' - u'v - pq' + p'q (the negative of inner_product_poly).
RealPoly han_numerator(const QuatPoly& a);

struct IndicatrixPair {
  RealPoly numerator_inner;
  RealPoly sigma;
  RationalFunction reduced;
};

IndicatrixPair indicatrix_pair(const QuatPoly& a);

/// Normalized component of A'i along A, reduced. Zero for A = 0.
RationalFunction rotation_indicatrix(const QuatPoly& a);

/// Left side of the RRMF condition, (uv'-u'v-pq'+p'q)/(u^2+v^2+p^2+q^2),
/// reduced. Equal to -rotation_indicatrix(A).
RationalFunction han_fraction(const QuatPoly& a);

/// (ab' - a'b)/(a^2 + b^2), reduced.
RationalFunction han_fraction(const RealPoly& a, const RealPoly& b);

/// Checks (ab'-a'b) sigma = N_han (a^2+b^2) as a polynomial identity.
/// Throws PreconditionError when gcd(a, b) != 1 or A's components are not coprime.
bool verify_han(const QuatPoly& a_poly, const RealPoly& a, const RealPoly& b);

/// ERF tangential angular velocity 2(uv'-u'v-pq'+p'q)/sigma, reduced.
RationalFunction omega1(const QuatPoly& a);

struct RhoEta {
  RealPoly rho;
  RealPoly eta;
  bool divisible;  // sigma | rho (and hence sigma | eta)
};

/// The equal-degree divisibility criterion polynomials.
RhoEta rho_eta(const QuatPoly& a);

/// Cross-multiplied residual of the product formula for the indicatrix of BA:
///   <(BA)'i, BA> - [(|alpha|^2-|beta|^2) <B'i, B> - 2 <B' alpha beta k, B> + |B|^2 <A'i, A>]
/// where A = alpha + beta j. The formula asserts this is identically zero.
RealPoly indicatrix_product_residual(const QuatPoly& b, const QuatPoly& a);

}  // namespace rrmf

#endif  // RRMF_INDICATRIX_HPP

#include "rrmf/indicatrix.hpp"

namespace rrmf {

RealPoly han_numerator(const QuatPoly& a) {
  const auto [u, v, p, q] = components(a);
  return u * v.derivative() - u.derivative() * v - p * q.derivative() + p.derivative() * q;
}

RealPoly inner_product_poly(const QuatPoly& a) {
  const auto [u, v, p, q] = components(a);
  return -(v.derivative() * u - u.derivative() * v - q.derivative() * p + p.derivative() * q);
}

IndicatrixPair indicatrix_pair(const QuatPoly& a) {
  RealPoly inner = inner_product_poly(a);
  RealPoly sigma = norm_poly(a);
  RationalFunction reduced = a.is_zero() ? RationalFunction{} : reduce_fraction(inner, sigma);
  return {std::move(inner), std::move(sigma), std::move(reduced)};
}

RationalFunction rotation_indicatrix(const QuatPoly& a) {
  if (a.is_zero()) return {};
  return reduce_fraction(inner_product_poly(a), norm_poly(a));
}

RationalFunction han_fraction(const QuatPoly& a) {
  if (a.is_zero()) throw PreconditionError("han_fraction: A must be nonzero");
  return reduce_fraction(han_numerator(a), norm_poly(a));
}

RationalFunction han_fraction(const RealPoly& a, const RealPoly& b) {
  return reduce_fraction(a * b.derivative() - a.derivative() * b, a * a + b * b);
}

bool verify_han(const QuatPoly& a_poly, const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("verify_han: a and b are both zero");
  if (gcd_real({a, b}).degree() != 0) throw PreconditionError("verify_han: a and b are not coprime");
  if (!has_coprime_components(a_poly)) throw PreconditionError("verify_han: components of A are not coprime");
  const RealPoly lhs = (a * b.derivative() - a.derivative() * b) * norm_poly(a_poly);
  const RealPoly rhs = han_numerator(a_poly) * (a * a + b * b);
  return lhs == rhs;
}

RationalFunction omega1(const QuatPoly& a) {
  if (a.is_zero()) throw PreconditionError("omega1: A must be nonzero");
  return reduce_fraction(han_numerator(a).scaled(Scalar(2)), norm_poly(a));
}

RhoEta rho_eta(const QuatPoly& a) {
  if (a.is_zero()) throw PreconditionError("rho_eta: A must be nonzero");
  const auto [u, v, p, q] = components(a);
  const RealPoly du = u.derivative(), dv = v.derivative(), dp = p.derivative(), dq = q.derivative();
  const RealPoly r1 = u * dp - du * p + v * dq - dv * q;
  const RealPoly r2 = u * dq - du * q - v * dp + dv * p;
  const RealPoly e1 = u * du + v * dv + p * dp + q * dq;
  const RealPoly e2 = u * dv - du * v - p * dq + dp * q;
  RhoEta out{r1 * r1 + r2 * r2, e1 * e1 + e2 * e2, false};
  const RealPoly sigma = norm_poly(a);
  out.divisible = divides(sigma, out.rho);
  if (out.divisible != divides(sigma, out.eta)) {
    throw InternalError("rho_eta: sigma divides exactly one of rho, eta");
  }
  return out;
}

RealPoly indicatrix_product_residual(const QuatPoly& b, const QuatPoly& a) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("indicatrix_product_residual: A and B must be nonzero");
  const QuatPoly ba = b * a;
  const QuatPoly i_const = QuatPoly::constant(Quaternion::i());
  const QuatPoly k_const = QuatPoly::constant(Quaternion::k());
  const auto [alpha, beta] = split(a);
  const RealPoly lhs = inner_poly(ba.derivative() * i_const, ba);

  const RealPoly na = norm_poly(alpha);
  const RealPoly nb = norm_poly(beta);
  const QuatPoly db = b.derivative();
  const RealPoly inner_b = inner_poly(db * i_const, b);
  const RealPoly cross_term = inner_poly(db * to_quat(alpha * beta) * k_const, b);
  const RealPoly inner_a = inner_poly(a.derivative() * i_const, a);
  const RealPoly rhs = (na - nb) * inner_b - cross_term.scaled(Scalar(2)) + norm_poly(b) * inner_a;
  return lhs - rhs;
}

}  // namespace rrmf

#include "rrmf/poly.hpp"

#include <array>

namespace rrmf {

double eval_double(const RealPoly& p, double at) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + it->to_double();
  return acc;
}

RealPoly gcd_real(std::initializer_list<RealPoly> polys) {
  return gcd_all<Scalar>(std::span<const RealPoly>(polys.begin(), polys.size()));
}
RealPoly gcd_real(std::span<const RealPoly> polys) { return gcd_all<Scalar>(polys); }

ComplexPoly gcd_complex(std::initializer_list<ComplexPoly> polys) {
  return gcd_all<Complex>(std::span<const ComplexPoly>(polys.begin(), polys.size()));
}
ComplexPoly gcd_complex(std::span<const ComplexPoly> polys) { return gcd_all<Complex>(polys); }

ComplexPoly to_complex(const RealPoly& p) {
  return p.map([](const Scalar& s) { return Complex(s); });
}

ComplexPoly make_complex(const RealPoly& re, const RealPoly& im) {
  std::vector<Complex> out(std::max(re.size(), im.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Complex(re.coeff(k), im.coeff(k));
  return ComplexPoly(std::move(out));
}

RealPoly real_part(const ComplexPoly& p) {
  return p.map([](const Complex& c) { return c.re; });
}

RealPoly imag_part(const ComplexPoly& p) {
  return p.map([](const Complex& c) { return c.im; });
}

ComplexPoly conjugate(const ComplexPoly& p) {
  return p.map([](const Complex& c) { return c.conj(); });
}

QuatPoly to_quat(const RealPoly& p) {
  return p.map([](const Scalar& s) { return Quaternion(s); });
}

QuatPoly to_quat(const ComplexPoly& p) {
  return p.map([](const Complex& c) { return Quaternion(c); });
}

QuatComponents components(const QuatPoly& a) {
  return {a.map([](const Quaternion& q) { return q.w; }), a.map([](const Quaternion& q) { return q.x; }),
          a.map([](const Quaternion& q) { return q.y; }), a.map([](const Quaternion& q) { return q.z; })};
}

QuatPoly from_components(const RealPoly& u, const RealPoly& v, const RealPoly& p, const RealPoly& q) {
  const std::size_t n = std::max({u.size(), v.size(), p.size(), q.size()});
  std::vector<Quaternion> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = Quaternion(u.coeff(k), v.coeff(k), p.coeff(k), q.coeff(k));
  return QuatPoly(std::move(out));
}

ComplexSplit split(const QuatPoly& a) {
  const auto [u, v, p, q] = components(a);
  return {make_complex(u, v), make_complex(p, q)};
}

QuatPoly join(const ComplexPoly& alpha, const ComplexPoly& beta) {
  return from_components(real_part(alpha), imag_part(alpha), real_part(beta), imag_part(beta));
}

QuatPoly quat_poly_product(const QuatPoly& p, const QuatPoly& q) { return p * q; }

QuatPoly quat_poly_conjugate(const QuatPoly& p) {
  return p.map([](const Quaternion& c) { return c.conj(); });
}

RealPoly norm_poly(const QuatPoly& a) {
  const auto [u, v, p, q] = components(a);
  return u * u + v * v + p * p + q * q;
}

RealPoly norm_poly(const ComplexPoly& a) {
  const RealPoly re = real_part(a);
  const RealPoly im = imag_part(a);
  return re * re + im * im;
}

RealPoly inner_poly(const QuatPoly& x, const QuatPoly& y) {
  const auto cx = components(x);
  const auto cy = components(y);
  return cx.u * cy.u + cx.v * cy.v + cx.p * cy.p + cx.q * cy.q;
}

QuatPoly right_mul(const QuatPoly& p, const Quaternion& q) {
  return p.map([&q](const Quaternion& c) { return c * q; });
}

bool has_coprime_components(const QuatPoly& a) {
  if (a.is_zero()) return false;
  const auto [u, v, p, q] = components(a);
  return gcd_real({u, v, p, q}).degree() == 0;
}

bool has_coprime_components(const ComplexPoly& a) {
  if (a.is_zero()) return false;
  return gcd_real({real_part(a), imag_part(a)}).degree() == 0;
}

RealPoly antiderivative(const RealPoly& p) {
  std::vector<Scalar> out(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p.coefficients()[k] / Scalar(static_cast<long>(k + 1));
  return RealPoly(std::move(out));
}

RationalFunction reduce_fraction(const RealPoly& n, const RealPoly& d) {
  if (d.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (n.is_zero()) return {};
  const RealPoly g = gcd(n, d);
  RealPoly num = exact_divide(n, g);
  RealPoly den = exact_divide(d, g);
  const Scalar lead_inv = den.lead().inverse();
  return {num.scaled(lead_inv), den.scaled(lead_inv)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return reduce_fraction(a.numerator * b.denominator + b.numerator * a.denominator,
                         a.denominator * b.denominator);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return reduce_fraction(a.numerator * b.numerator, a.denominator * b.denominator);
}

RationalFunction operator-(const RationalFunction& a) { return {-a.numerator, a.denominator}; }

RationalFunction scaled(const RationalFunction& f, const Scalar& s) {
  return reduce_fraction(f.numerator.scaled(s), f.denominator);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << "(" << f.numerator << ") / (" << f.denominator << ")";
}

}  // namespace rrmf

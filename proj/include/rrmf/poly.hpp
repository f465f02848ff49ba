#ifndef RRMF_POLY_HPP
#define RRMF_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rrmf/errors.hpp"
#include "rrmf/quaternion.hpp"
#include "rrmf/scalar.hpp"

namespace rrmf {

/// Dense univariate polynomial with coefficients in a (possibly
/// noncommutative) ring T, stored in ascending order. The zero polynomial
/// is the empty list; otherwise the last coefficient is nonzero.
template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  /// The indeterminate xi.
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  std::size_t size() const { return c_.size(); }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }
  const T& lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<T>& coefficients() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  /// Coefficient convolution; the order of factors in each product is kept.
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t r = 0; r < a.c_.size(); ++r) {
      if (a.c_[r].is_zero()) continue;
      for (std::size_t s = 0; s < b.c_.size(); ++s) out[r + s] += a.c_[r] * b.c_[s];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
    return Poly(std::move(out));
  }

  /// Multiplies every coefficient by a real scalar.
  Poly scaled(const Scalar& s) const {
    if (s.is_zero()) return {};
    Poly out = *this;
    for (auto& c : out.c_) c = s * c;
    return out;
  }

  /// Multiplies every coefficient by t on the left.
  Poly left_mul(const T& t) const {
    std::vector<T> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = t * c_[k];
    return Poly(std::move(out));
  }

  /// Coefficientwise map into another ring.
  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<U>(std::move(out));
  }

  /// Evaluation at a real point; real scalars are central so the order is immaterial.
  T operator()(const Scalar& at) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = at * acc + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

using RealPoly = Poly<Scalar>;
using ComplexPoly = Poly<Complex>;
using QuatPoly = Poly<Quaternion>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const T& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
  }
  return os;
}

/// Floating evaluation of a real polynomial.
double eval_double(const RealPoly& p, double at);

// ---------------------------------------------------------------------------
// Division and gcd

template <class T>
struct DivResult {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// p = quotient * d + remainder with deg remainder < deg d. For quaternion
/// coefficients this is right division; for commutative rings it is the
/// ordinary one.
template <class T>
DivResult<T> right_divmod(const Poly<T>& p, const Poly<T>& d) {
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  const T lead_inv = d.lead().inverse();
  std::vector<T> q(p.degree() >= d.degree() ? p.degree() - d.degree() + 1 : 0);
  Poly<T> r = p;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
    T t = r.lead() * lead_inv;
    r -= Poly<T>::monomial(t, shift) * d;
    q[shift] = std::move(t);
  }
  return {Poly<T>(std::move(q)), std::move(r)};
}

/// Quotient of an exact (right) division; throws InexactDivision otherwise.
template <class T>
Poly<T> exact_divide(const Poly<T>& p, const Poly<T>& d) {
  auto [q, r] = right_divmod(p, d);
  if (!r.is_zero()) throw InexactDivision("polynomial division leaves a nonzero remainder");
  return q;
}

template <class T>
bool divides(const Poly<T>& d, const Poly<T>& p) {
  return right_divmod(p, d).remainder.is_zero();
}

/// Scales so the leading coefficient is 1 (left multiplication by its inverse).
template <class T>
Poly<T> make_monic(const Poly<T>& p) {
  if (p.is_zero() || p.lead().is_one()) return p;
  return p.left_mul(p.lead().inverse());
}

/// Monic gcd over a commutative field by the Euclidean algorithm.
template <class T>
Poly<T> gcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> x = make_monic(a);
  Poly<T> y = make_monic(b);
  while (!y.is_zero()) {
    Poly<T> r = make_monic(right_divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

template <class T>
Poly<T> gcd_all(std::span<const Poly<T>> polys) {
  Poly<T> g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    any = true;
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  if (!any) throw PreconditionError("gcd of polynomials that are all zero");
  return g;
}

/// Monic gcd over Q(sqrt(d)) of real polynomials, not all zero.
RealPoly gcd_real(std::initializer_list<RealPoly> polys);
RealPoly gcd_real(std::span<const RealPoly> polys);
/// Monic gcd over Q(sqrt(d))(i) of complex polynomials, not all zero.
ComplexPoly gcd_complex(std::initializer_list<ComplexPoly> polys);
ComplexPoly gcd_complex(std::span<const ComplexPoly> polys);

// ---------------------------------------------------------------------------
// Moving between real, complex and quaternion coefficients

struct QuatComponents {
  RealPoly u, v, p, q;
};

/// A = alpha + beta j with alpha = u + v i and beta = p + q i.
struct ComplexSplit {
  ComplexPoly alpha, beta;
};

ComplexPoly to_complex(const RealPoly& p);
ComplexPoly make_complex(const RealPoly& re, const RealPoly& im);
RealPoly real_part(const ComplexPoly& p);
RealPoly imag_part(const ComplexPoly& p);
ComplexPoly conjugate(const ComplexPoly& p);

QuatPoly to_quat(const RealPoly& p);
QuatPoly to_quat(const ComplexPoly& p);
QuatComponents components(const QuatPoly& a);
QuatPoly from_components(const RealPoly& u, const RealPoly& v, const RealPoly& p, const RealPoly& q);
ComplexSplit split(const QuatPoly& a);
QuatPoly join(const ComplexPoly& alpha, const ComplexPoly& beta);

QuatPoly quat_poly_product(const QuatPoly& p, const QuatPoly& q);
/// Coefficientwise conjugation, so that (PQ)* = Q* P*.
QuatPoly quat_poly_conjugate(const QuatPoly& p);

/// u^2 + v^2 + p^2 + q^2.
RealPoly norm_poly(const QuatPoly& a);
RealPoly norm_poly(const ComplexPoly& a);

/// Pointwise Euclidean inner product of two quaternion polynomials.
RealPoly inner_poly(const QuatPoly& x, const QuatPoly& y);

/// Right multiplication of every coefficient by a constant quaternion.
QuatPoly right_mul(const QuatPoly& p, const Quaternion& q);

/// Gcd of the four real components is 1.
bool has_coprime_components(const QuatPoly& a);
bool has_coprime_components(const ComplexPoly& a);

/// Exact antiderivative with zero constant term.
RealPoly antiderivative(const RealPoly& p);

/// The reduced rational function n/d: gcd(n, d) = 1 and d monic.
struct RationalFunction {
  RealPoly numerator;
  RealPoly denominator{Scalar(1)};

  bool is_zero() const { return numerator.is_zero(); }
  double eval_double(double at) const {
    return rrmf::eval_double(numerator, at) / rrmf::eval_double(denominator, at);
  }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Reduces n/d to lowest terms with monic denominator. Throws when d = 0.
RationalFunction reduce_fraction(const RealPoly& n, const RealPoly& d);

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction scaled(const RationalFunction& f, const Scalar& s);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace rrmf

#endif  // RRMF_POLY_HPP

#ifndef RRMF_QUATERNION_HPP
#define RRMF_QUATERNION_HPP

#include <array>
#include <iosfwd>
#include <utility>

#include "rrmf/scalar.hpp"

namespace rrmf {

/// re + im*i over Q(sqrt(d)); the subalgebra C of H.
struct Complex {
  Scalar re;
  Scalar im;

  Complex() = default;
  Complex(Scalar r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(long r) : re(r) {}               // NOLINT(google-explicit-constructor)
  Complex(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  Complex conj() const { return {re, -im}; }
  Scalar norm2() const { return re * re + im * im; }
  Complex inverse() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  Complex operator-() const { return {-re, -im}; }
  friend bool operator==(const Complex& a, const Complex& b) = default;
};

std::ostream& operator<<(std::ostream& os, const Complex& c);

/// w + x i + y j + z k over Q(sqrt(d)).
struct Quaternion {
  Scalar w;
  Scalar x;
  Scalar y;
  Scalar z;

  Quaternion() = default;
  Quaternion(Scalar s) : w(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Quaternion(long s) : w(s) {}               // NOLINT(google-explicit-constructor)
  Quaternion(const Complex& c) : w(c.re), x(c.im) {}  // NOLINT(google-explicit-constructor)
  Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_one() const { return w.is_one() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_pure() const { return w.is_zero(); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  Scalar norm2() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;
  Quaternion vector_part() const { return {0, x, y, z}; }

  /// (w, x, y, z) in that order.
  std::array<Scalar, 4> components() const { return {w, x, y, z}; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o);
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Hamilton product. Throws SurdMismatch on mixed bases.
Quaternion quat_product(const Quaternion& p, const Quaternion& q);

/// Euclidean inner product on R^4: x0 y0 + x1 y1 + x2 y2 + x3 y3.
Scalar quat_inner(const Quaternion& x, const Quaternion& y);

/// <X,Y>/<Y,Y>; throws PreconditionError when Y = 0.
Scalar normalized_component(const Quaternion& x, const Quaternion& y);

/// Cross product of the vector parts (the result is pure).
Quaternion cross(const Quaternion& a, const Quaternion& b);

inline Quaternion operator*(const Scalar& s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}
inline Complex operator*(const Scalar& s, const Complex& c) { return {s * c.re, s * c.im}; }

}  // namespace rrmf

#endif  // RRMF_QUATERNION_HPP

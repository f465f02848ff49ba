#include "rrmf/quaternion.hpp"

#include <ostream>

#include "rrmf/errors.hpp"

namespace rrmf {

Complex Complex::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero complex");
  const Scalar n = norm2().inverse();
  return {re * n, -im * n};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Scalar r = re * o.re - im * o.im;
  Scalar i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Complex& c) {
  return os << "(" << c.re << ", " << c.im << ")";
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero quaternion");
  const Scalar n = norm2().inverse();
  return n * conj();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

Quaternion quat_product(const Quaternion& p, const Quaternion& q) { return p * q; }

Scalar quat_inner(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Scalar normalized_component(const Quaternion& x, const Quaternion& y) {
  if (y.is_zero()) throw PreconditionError("normalized component along the zero quaternion");
  return quat_inner(x, y) / y.norm2();
}

Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return {0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace rrmf

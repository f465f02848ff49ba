#ifndef RRMF_SCALAR_HPP
#define RRMF_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <string>
#include <string_view>

namespace rrmf {

/// Exact element r + s*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// The base d is either 0 (plain rationals, s == 0) or a squarefree integer
/// >= 2. A value with base 0 combines with any base; two values with
/// different nonzero bases cannot be mixed and raise SurdMismatch.
/// GMP keeps both parts in lowest terms with positive denominators, so
/// equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class rational) : rational_(std::move(rational)) { rational_.canonicalize(); }
  Scalar(mpq_class rational, mpq_class surd, unsigned base);

  /// s*sqrt(d)
  static Scalar sqrt_of(unsigned base, mpq_class coefficient = 1);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& surd_part() const { return surd_; }
  unsigned base() const { return base_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(surd_) == 0; }
  bool is_one() const { return rational_ == 1 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  /// Exact sign of r + s*sqrt(d): -1, 0 or +1.
  int sign() const;

  Scalar inverse() const;
  Scalar conjugate_surd() const;  // r - s*sqrt(d)
  double to_double() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }

  /// Canonical text: "a/b" or "a/b+c/e*sqrt(d)" (integers print without "/1").
  std::string to_string() const;

  /// Parses the text form. `base` is the document's surd base; any sqrt(k)
  /// in the text must use exactly that base.
  static Scalar parse(std::string_view text, unsigned base);

 private:
  mpq_class rational_{0};
  mpq_class surd_{0};
  unsigned base_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Validates a surd base: 0 or squarefree >= 2.
bool is_valid_surd_base(unsigned base);

}  // namespace rrmf

#endif  // RRMF_SCALAR_HPP

#ifndef RRMF_CONSTRUCT_HPP
#define RRMF_CONSTRUCT_HPP

#include <utility>
#include <vector>

#include "rrmf/classify.hpp"
#include "rrmf/poly.hpp"

namespace rrmf {

/// C * sum_m (x_m + y_m u) xi^m with u a vector orthogonal to i.
/// u need not be unit length: rescaling u only rescales the y_m.
QuatPoly make_trivial(const Quaternion& left_factor, const Quaternion& direction,
                      const std::vector<std::pair<Scalar, Scalar>>& coeffs);

/// Non-trivial cubic C (A3 xi^3 + A2 xi^2 + A1 xi + 1).
struct CubicSpec {
  Quaternion a1;
  Quaternion a2;
  Scalar s3;                   // scalar part of A3
  Quaternion left_factor{1};   // C
};

QuatPoly make_cubic(const CubicSpec& spec);

/// Monic non-trivial cubic xi^3 + A2 xi^2 + A1 xi + A0.
QuatPoly make_cubic_monic(const Quaternion& a1, const Quaternion& a2, const Scalar& s0 = Scalar());

/// Degree-4 element C (A4 xi^4 + A3 xi^3 + A2 xi^2 + A1 xi + 1) with the
/// i-component of A3 forced and A4 solved from the remaining conditions.
/// When the particular solution is 0 the first kernel direction is used.
struct QuarticSpec {
  Quaternion a1;
  Quaternion a2;
  Scalar a3_j;
  Scalar a3_k;
  Scalar s3;                  // scalar part of A3
  Quaternion left_factor{1};  // C
};

struct QuarticResult {
  QuatPoly poly;
  std::size_t family_dimension = 0;  // nullity of the linear system for A4
  std::vector<Quaternion> family;    // A4 + any combination of these also works
  bool nontrivial = false;           // by the two span conditions
};

QuarticResult make_quartic(const QuarticSpec& spec);

/// (n-2) i xi^n + n k xi^{n-1} + j xi + 1, n >= 3.
QuatPoly make_family_n(int n);

struct FElement {
  QuatPoly a;
  Certificate certificate;  // gamma = a + b i with A in F_gamma
};

/// A = core(B0) * delta with the certificate nu = mu* delta / |gcd(mu, delta)|^2,
/// where B0 = core * mu.
FElement make_f_element(const QuatPoly& b0, const ComplexPoly& delta);

}  // namespace rrmf

#endif  // RRMF_CONSTRUCT_HPP

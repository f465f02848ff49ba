#ifndef RRMF_CLASSIFY_HPP
#define RRMF_CLASSIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrmf/poly.hpp"

namespace rrmf {

/// c_m = sum_{k=0}^{m} (k+1) <A_{m-k}, A_{k+1} i>,  m = 0 .. 2n-2.
/// These are the coefficients of <A, A'i>; A is in F0 iff all vanish.
struct CmList {
  std::vector<Scalar> values;
  bool all_zero() const;
};

/// Computes the c_m list and validates it against the coefficients of
/// inner_product_poly and against the degree-(n-1) recursion.
CmList c_coefficients(const QuatPoly& a);

/// The c_m list for the series A_0, ..., A_n truncated at `degree`
/// (coefficients above `degree` treated as zero), m = 0 .. 2*degree-2.
CmList c_coefficients_truncated(const QuatPoly& a, int degree);

/// Checks the recursion linking the c_m of A to those of A with its leading
/// coefficient removed.
bool inductive_step_holds(const QuatPoly& a);

/// Coprime components and vanishing indicatrix; cross-checked against
/// <alpha'i, alpha> = <beta'i, beta>.
bool is_in_F0(const QuatPoly& a);

/// A = C * At with every coefficient of At in R + R u, u a vector with u ⊥ i.
/// The direction u is kept unnormalised together with |u|^2 so every
/// check stays inside Q(sqrt(d)).
struct TrivialWitness {
  Quaternion left_factor;  // C
  Quaternion direction;    // u, up to positive scale
  Scalar direction_norm2;  // |u|^2
  QuatPoly reduced;        // C^{-1} A
};

std::optional<TrivialWitness> is_trivial(const QuatPoly& a);

/// Rank of the real span of the vector coefficients b_l of A i A*.
std::size_t hodograph_span_rank(const QuatPoly& a);

/// The hodograph ranges in a plane through the origin (rank <= 2).
bool is_planar(const QuatPoly& a);

/// gcd_H(A, gamma) = gcd_C(alpha, beta*, gamma).
ComplexPoly gcd_H_with_complex(const QuatPoly& a, const ComplexPoly& gamma);

struct F0Reduction {
  QuatPoly reduced;  // A gamma* / |gcd_H(A, gamma)|^2
  ComplexPoly gcd;   // gcd_H(A, gamma)
  bool in_F0 = false;
};

F0Reduction reduce_to_F0(const QuatPoly& a, const ComplexPoly& gamma);

/// Coprime real pair (a, b) with gamma = a + b i.
struct Certificate {
  RealPoly a;
  RealPoly b;
  ComplexPoly gamma() const { return make_complex(a, b); }
  static Certificate from_gamma(const ComplexPoly& g) { return {real_part(g), imag_part(g)}; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SearchOptions {
  int max_degree = 4;
  std::chrono::milliseconds budget{10000};
  std::uint64_t seed = 0;
};

/// Heuristic certificate search; returns only exactly verified pairs with
/// gamma = a + b i monic. nullopt is not a disproof.
std::optional<Certificate> search_gamma(const QuatPoly& a, const SearchOptions& opts);

enum class Membership { ProvenInF, CertificateRejected, Unknown };

std::string to_string(Membership m);

struct FVerdict {
  Membership status = Membership::Unknown;
  std::string method;  // how the verdict was reached
  std::optional<Certificate> certificate;
};

/// Three-valued F-membership. With a certificate, verifies it via
/// reduce_to_F0; without, tries F0 membership, the equal-degree rho/eta
/// criterion and optionally search_gamma. Never reports "not in F".
FVerdict f_membership(const QuatPoly& a, const std::optional<Certificate>& certificate,
                      const std::optional<SearchOptions>& search = std::nullopt);

struct Classification {
  bool in_widetilde = false;
  bool in_F0 = false;
  std::optional<TrivialWitness> trivial_witness;
  bool planar = false;
  bool primitive = false;
  int core_degree = 0;
  ComplexPoly chi;
  FVerdict in_F;
  std::optional<Certificate> han_certificate;
  std::string notes;
};

Classification classify(const QuatPoly& a, const std::optional<Certificate>& certificate,
                        const std::optional<SearchOptions>& search = std::nullopt);

}  // namespace rrmf

#endif  // RRMF_CLASSIFY_HPP

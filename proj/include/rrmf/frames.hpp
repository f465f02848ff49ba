#ifndef RRMF_FRAMES_HPP
#define RRMF_FRAMES_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rrmf/classify.hpp"
#include "rrmf/hodograph.hpp"
#include "rrmf/poly.hpp"

namespace rrmf {

using RationalVector = std::array<RationalFunction, 3>;

/// Adapted frame (f1, f2, f3) = (B i B*, B j B*, B k B*) / |B|^2.
struct SymbolicFrame {
  std::array<VectorPoly, 3> numerators;
  RealPoly denominator;  // |B|^2, not reduced against the numerators
  std::array<RationalVector, 3> f;  // each entry reduced
};

SymbolicFrame erf_symbolic(const QuatPoly& a);

/// ERF of B = A (a - b i). Throws PreconditionError unless verify_han(A, a, b).
SymbolicFrame rmf_symbolic(const QuatPoly& a, const RealPoly& ca, const RealPoly& cb);

/// Normal-plane rotation of the ERF (e2, e3) of A by the angle of (a + b i)^2:
///   f2 = ((a^2-b^2) e2 - 2ab e3)/(a^2+b^2),  f3 = (2ab e2 + (a^2-b^2) e3)/(a^2+b^2).
std::array<RationalVector, 2> rotate_frame(const QuatPoly& a, const RealPoly& ca, const RealPoly& cb);

RationalFunction dot(const RationalVector& x, const RationalVector& y);

/// The six identities <f_i, f_j> = delta_ij, checked exactly.
bool is_orthonormal(const SymbolicFrame& frame);

/// Numerator of <f3, f2'> over the denominator |B|^3, i.e.
///   <N3, N2'> D - <N3, N2> D'   with f_k = N_k / D.
RealPoly twist_numerator(const SymbolicFrame& frame);

enum class FrameKind { Erf, Rmf, Frenet };

std::optional<FrameKind> parse_frame_kind(const std::string& text);
std::string to_string(FrameKind kind);

struct FrameSample {
  double xi = 0;
  std::array<double, 3> position{};
  std::array<std::array<double, 3>, 3> f{};
};

struct SampleOptions {
  FrameKind kind = FrameKind::Erf;
  std::optional<Certificate> certificate;  // required for Rmf
  double normal_rotation = 0;              // constant extra angle applied to (f2, f3)
  double tolerance = 1e-12;                // on |f_k| - 1 and <f_i, f_j>
};

struct SampleReport {
  std::vector<FrameSample> samples;
  std::vector<std::string> warnings;  // skipped samples
};

/// Floating evaluation of the frames with positions from integrate(hodograph_of(A)).
/// Samples at zeros of sigma, or of the curvature for Frenet, are skipped with a warning.
SampleReport sample_frames(const QuatPoly& a, const std::vector<double>& xi_values, const SampleOptions& opts);

/// Central-difference estimate of <f3, df2/dxi> at xi.
double sampled_twist(const QuatPoly& a, double xi, double h, const SampleOptions& opts);

/// xi,px,py,pz,f1x,...,f3z with shortest round-trip formatting.
void write_csv(std::ostream& os, const std::vector<FrameSample>& samples);

}  // namespace rrmf

#endif  // RRMF_FRAMES_HPP

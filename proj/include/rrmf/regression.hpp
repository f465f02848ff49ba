#ifndef RRMF_REGRESSION_HPP
#define RRMF_REGRESSION_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "rrmf/classify.hpp"
#include "rrmf/poly.hpp"

namespace rrmf {

/// Ascending coefficients from a descending list: desc({1, 0, -2}) = x^2 - 2.
RealPoly desc(std::initializer_list<long> coeffs);

struct NamedExample {
  std::string name;
  QuatPoly a;
  Certificate certificate;
};

/// The three quintic RRMF examples. `perturb` adds 1 to u of the first.
NamedExample quintic_example1(bool perturb = false);
NamedExample quintic_example2();
NamedExample quintic_example3();

/// -(1/3) i x^3 + j x^2 + k x + 1
QuatPoly catalog_cubic();
/// (-1 + k/3) x^4 + (i/3 + j) x^3 + k x^2 + j x + 1
QuatPoly catalog_quartic_a();
/// 2 i x^4 + 4 k x^3 + j x + 1
QuatPoly catalog_quartic_b();

/// Seeded generators for property checks. All values are small integers so
/// exact arithmetic stays cheap.
namespace gen {
using Rng = std::mt19937_64;
long integer(Rng& rng, long lo, long hi);
Quaternion quaternion(Rng& rng, long range = 4);
Quaternion jk_plane(Rng& rng, long range = 4);  // in R + Rj + Rk
Quaternion nonzero_quaternion(Rng& rng, long range = 3);
QuatPoly quat_poly(Rng& rng, int degree, long range = 4);
/// Monic with coprime real and imaginary parts.
ComplexPoly monic_complex(Rng& rng, int degree, long range = 3);
ComplexPoly coprime_complex(Rng& rng, int degree, long range = 3);
/// Coprime-component trivial element of exact degree n.
QuatPoly trivial(Rng& rng, int n);
/// Coprime-component non-trivial F0 element from the degree 3/4 constructions.
QuatPoly nontrivial_F0(Rng& rng);
QuatPoly any_F0(Rng& rng);

struct FGammaSample {
  QuatPoly b0;        // in F0
  ComplexPoly gamma;  // monic, coprime components
  QuatPoly a;         // b0 * gamma, coprime components
};
FGammaSample f_gamma(Rng& rng);
}  // namespace gen

struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BatteryOptions {
  bool perturb_example1 = false;
  std::uint64_t seed = 20160707;
  std::vector<int> criteria;  // empty: all of 1..9
};

std::vector<Check> run_battery(const BatteryOptions& opts);

/// Jacobian rank of the trivial-family parametrization at a random point.
int trivial_family_jacobian_rank(int n, std::uint64_t seed);

void print_checks(std::ostream& os, const std::vector<Check>& checks);

}  // namespace rrmf

#endif  // RRMF_REGRESSION_HPP

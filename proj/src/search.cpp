// Certificate search for the RRMF condition.
//
// For a complex polynomial gamma with coprime real parts,
//   (ab' - a'b)/(a^2 + b^2) = sum over roots x + iy of gamma of y / ((xi - x)^2 + y^2),
// so every root of gamma is a root of the reduced denominator D of han_fraction(A),
// and the residue of N/D at z (Im z > 0) fixes the multiplicity and
// which of z, z* is the root. The roots are found in floating point, gamma is
// rebuilt, rationalised, and accepted only after the exact identity check.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "rrmf/classify.hpp"
#include "rrmf/indicatrix.hpp"

namespace rrmf {

namespace {

using cplx = std::complex<long double>;

std::vector<long double> to_ld(const RealPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long double>(c.to_double()));
  return out;
}

cplx horner(const std::vector<long double>& c, cplx z) {
  cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<long double> deriv(const std::vector<long double>& c) {
  std::vector<long double> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(static_cast<long double>(k) * c[k]);
  return out;
}

// Roots of a monic real polynomial from the companion matrix.
std::vector<cplx> companion_roots(const std::vector<long double>& c) {
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 1; r < n; ++r) m(r, r - 1) = 1.0;
  for (Eigen::Index r = 0; r < n; ++r) m(r, n - 1) = -static_cast<double>(c[static_cast<std::size_t>(r)]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<cplx> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto ev = es.eigenvalues()[k];
    out.emplace_back(ev.real(), ev.imag());
  }
  return out;
}

// Aberth iteration from seeded random starting points.
std::vector<cplx> aberth_roots(const std::vector<long double>& c, std::mt19937_64& rng) {
  const std::size_t n = c.size() - 1;
  const std::vector<long double> dc = deriv(c);
  long double radius = 1;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, 1 + std::fabs(c[k]));
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> scale(0.2, 1.0);
  std::vector<cplx> z(n);
  for (auto& r : z) r = std::polar<long double>(radius * scale(rng), angle(rng));
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ratio = horner(c, z[k]) / horner(dc, z[k]);
      cplx sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const cplx step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-18L) break;
  }
  return z;
}

void polish(const std::vector<long double>& c, std::vector<cplx>& roots) {
  const std::vector<long double> dc = deriv(c);
  for (auto& z : roots) {
    for (int iter = 0; iter < 8; ++iter) {
      const cplx d = horner(dc, z);
      if (std::abs(d) == 0) break;
      z -= horner(c, z) / d;
    }
  }
}

// Best rational approximation by continued fractions.
mpq_class rationalize(long double x, long max_den) {
  long double frac = x;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergents h/k
  for (int iter = 0; iter < 64; ++iter) {
    const long double fl = std::floor(frac);
    const mpz_class a(static_cast<double>(fl));
    mpz_class h2 = a * h0 + h1, k2 = a * k0 + k1;
    if (k2 > max_den) break;
    h1 = h0;
    k1 = k0;
    h0 = h2;
    k0 = k2;
    const long double rem = frac - fl;
    if (std::fabs(rem) < 1e-15L) break;
    frac = 1 / rem;
  }
  mpq_class q(h0, k0);
  q.canonicalize();
  return q;
}

std::optional<Certificate> try_roots(const QuatPoly& a, const RationalFunction& han, const std::vector<cplx>& roots,
                                     int max_degree, long max_den) {
  const auto num = to_ld(han.numerator);
  const auto dden = deriv(to_ld(han.denominator));
  std::vector<cplx> gamma_roots;
  for (const auto& z : roots) {
    if (z.imag() <= 0) continue;
    // residue of N/D at z equals m * y / (2 i y) with m the signed multiplicity
    const cplx m = 2.0L * cplx(0, 1) * horner(num, z) / horner(dden, z);
    const long double rounded = std::round(m.real());
    if (std::fabs(m.imag()) > 1e-6L || std::fabs(m.real() - rounded) > 1e-6L || rounded == 0) return std::nullopt;
    const cplx root = rounded > 0 ? z : std::conj(z);
    for (long t = 0; t < static_cast<long>(std::fabs(rounded)); ++t) gamma_roots.push_back(root);
  }
  if (static_cast<int>(gamma_roots.size()) > max_degree) return std::nullopt;
  if (2 * static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](const cplx& z) {
        return z.imag() > 0;
      })) != roots.size()) {
    return std::nullopt;
  }

  std::vector<cplx> coeffs{1};  // monic product of (xi - root)
  for (const auto& r : gamma_roots) {
    std::vector<cplx> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= r * coeffs[k];
    }
    coeffs = std::move(next);
  }
  std::vector<Complex> exact;
  for (const auto& c : coeffs) exact.emplace_back(Scalar(rationalize(c.real(), max_den)), Scalar(rationalize(c.imag(), max_den)));
  const ComplexPoly gamma(std::move(exact));
  if (!has_coprime_components(gamma)) return std::nullopt;
  Certificate cert = Certificate::from_gamma(gamma);
  if (!verify_han(a, cert.a, cert.b)) return std::nullopt;
  return cert;
}

}  // namespace

std::optional<Certificate> search_gamma(const QuatPoly& a, const SearchOptions& opts) {
  if (!has_coprime_components(a)) throw PreconditionError("search_gamma: components of A are not coprime");
  const auto deadline = std::chrono::steady_clock::now() + opts.budget;
  const RationalFunction han = han_fraction(a);
  if (han.is_zero()) return Certificate{RealPoly::constant(Scalar(1)), RealPoly{}};
  if (opts.max_degree <= 0) return std::nullopt;
  // The fraction of a certificate has even-degree denominator strictly above the numerator.
  if (han.denominator.degree() % 2 != 0 || han.numerator.degree() >= han.denominator.degree()) return std::nullopt;
  if (han.denominator.degree() / 2 > opts.max_degree) return std::nullopt;

  const auto dcoef = to_ld(han.denominator);
  std::mt19937_64 rng(opts.seed);
  static constexpr long kDenominators[] = {1000, 100000, 10000000, 1000000000};
  for (int attempt = 0; std::chrono::steady_clock::now() < deadline; ++attempt) {
    std::vector<cplx> roots = attempt == 0 ? companion_roots(dcoef) : aberth_roots(dcoef, rng);
    polish(dcoef, roots);
    for (const long max_den : kDenominators) {
      if (auto cert = try_roots(a, han, roots, opts.max_degree, max_den)) return cert;
    }
    if (attempt >= 16) break;
  }
  return std::nullopt;
}

}  // namespace rrmf

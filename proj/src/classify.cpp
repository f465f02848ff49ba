#include "rrmf/classify.hpp"

#include "rrmf/hodograph.hpp"
#include "rrmf/indicatrix.hpp"
#include "rrmf/linalg.hpp"

namespace rrmf {

namespace {

void require_nonzero(const QuatPoly& a, const char* op) {
  if (a.is_zero()) throw PreconditionError(std::string(op) + ": A must be nonzero");
}

const Quaternion& unit_i() {
  static const Quaternion i = Quaternion::i();
  return i;
}

Scalar c_value(const QuatPoly& a, int degree, int m) {
  Scalar c;
  for (int k = 0; k <= m; ++k) {
    if (m - k > degree || k + 1 > degree) continue;
    const Quaternion lhs = a.coeff(static_cast<std::size_t>(m - k));
    const Quaternion rhs = a.coeff(static_cast<std::size_t>(k + 1)) * unit_i();
    c += Scalar(k + 1) * quat_inner(lhs, rhs);
  }
  return c;
}

bool parallel(const Quaternion& a, const Quaternion& b) { return cross(a, b).is_zero(); }

}  // namespace

bool CmList::all_zero() const {
  for (const auto& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

CmList c_coefficients_truncated(const QuatPoly& a, int degree) {
  CmList out;
  for (int m = 0; m <= 2 * degree - 2; ++m) out.values.push_back(c_value(a, degree, m));
  return out;
}

bool inductive_step_holds(const QuatPoly& a) {
  const int n = a.degree();
  if (n < 1) return true;
  const CmList cur = c_coefficients_truncated(a, n);
  const CmList prev = c_coefficients_truncated(a, n - 1);
  const Quaternion lead_i = a.lead() * unit_i();
  auto tail = [&](int m) {
    return Scalar(2 * n - m - 1) * quat_inner(a.coeff(static_cast<std::size_t>(m + 1 - n)), lead_i);
  };
  for (int m = 0; m <= 2 * n - 2; ++m) {
    Scalar expected;
    if (m <= n - 2) {
      expected = prev.values[m];
    } else if (m <= 2 * n - 4) {
      expected = prev.values[m] + tail(m);
    } else {
      expected = tail(m);
    }
    if (cur.values[m] != expected) return false;
  }
  // c_{2n-1} = n <A_n, A_n i> always vanishes.
  return c_value(a, n, 2 * n - 1).is_zero();
}

CmList c_coefficients(const QuatPoly& a) {
  require_nonzero(a, "c_coefficients");
  CmList out = c_coefficients_truncated(a, a.degree());
  const RealPoly inner = inner_product_poly(a);
  for (std::size_t m = 0; m < out.values.size(); ++m) {
    if (out.values[m] != inner.coeff(m)) throw InternalError("c_coefficients: disagrees with <A'i, A>");
  }
  if (inner.degree() > static_cast<int>(out.values.size()) - 1) {
    throw InternalError("c_coefficients: <A'i, A> has degree above 2n-2");
  }
  if (!inductive_step_holds(a)) throw InternalError("c_coefficients: degree recursion violated");
  return out;
}

bool is_in_F0(const QuatPoly& a) {
  require_nonzero(a, "is_in_F0");
  const bool vanishing = c_coefficients(a).all_zero();
  const auto [alpha, beta] = split(a);
  const QuatPoly i_const = QuatPoly::constant(unit_i());
  const QuatPoly qa = to_quat(alpha), qb = to_quat(beta);
  const bool balanced = inner_poly(qa.derivative() * i_const, qa) == inner_poly(qb.derivative() * i_const, qb);
  if (vanishing != balanced) throw InternalError("is_in_F0: c_m test and alpha/beta balance disagree");
  return vanishing && has_coprime_components(a);
}

std::optional<TrivialWitness> is_trivial(const QuatPoly& a) {
  require_nonzero(a, "is_trivial");
  if (!has_coprime_components(a)) throw PreconditionError("is_trivial: components of A are not coprime");
  const auto& coeffs = a.coefficients();
  std::size_t first = 0;
  while (coeffs[first].is_zero()) ++first;
  const Quaternion c = coeffs[first];
  const Quaternion c_inv = c.inverse();
  std::optional<Quaternion> dir;
  std::vector<Quaternion> reduced;
  reduced.reserve(coeffs.size());
  for (const auto& ak : coeffs) {
    Quaternion t = c_inv * ak;
    const Quaternion v = t.vector_part();
    if (!v.x.is_zero()) return std::nullopt;  // component along i
    if (!v.is_zero()) {
      if (!dir) {
        dir = v;
      } else if (!parallel(*dir, v)) {
        return std::nullopt;
      }
    }
    reduced.push_back(std::move(t));
  }
  const Quaternion u = dir.value_or(Quaternion::j());
  return TrivialWitness{c, u, u.norm2(), QuatPoly(std::move(reduced))};
}

std::size_t hodograph_span_rank(const QuatPoly& a) {
  require_nonzero(a, "hodograph_span_rank");
  const Hodograph h = hodograph_of(a);
  ScalarMatrix rows;
  for (int l = 0; l <= h.sigma.degree(); ++l) {
    const auto k = static_cast<std::size_t>(l);
    rows.push_back({h.xprime.coeff(k), h.yprime.coeff(k), h.zprime.coeff(k)});
  }
  return exact_rank(std::move(rows));
}

bool is_planar(const QuatPoly& a) {
  const bool planar = hodograph_span_rank(a) <= 2;
  if (has_coprime_components(a) && is_in_F0(a) && planar != is_trivial(a).has_value()) {
    throw InternalError("is_planar: F0 element whose planarity disagrees with triviality");
  }
  return planar;
}

ComplexPoly gcd_H_with_complex(const QuatPoly& a, const ComplexPoly& gamma) {
  require_nonzero(a, "gcd_H_with_complex");
  if (gamma.is_zero()) throw PreconditionError("gcd_H_with_complex: gamma must be nonzero");
  const auto [alpha, beta] = split(a);
  return gcd_complex({alpha, conjugate(beta), gamma});
}

F0Reduction reduce_to_F0(const QuatPoly& a, const ComplexPoly& gamma) {
  if (!has_coprime_components(a)) throw PreconditionError("reduce_to_F0: components of A are not coprime");
  if (!has_coprime_components(gamma)) throw PreconditionError("reduce_to_F0: components of gamma are not coprime");
  ComplexPoly g = gcd_H_with_complex(a, gamma);
  const QuatPoly weighted = a * to_quat(conjugate(gamma));
  QuatPoly b = exact_divide(weighted, to_quat(norm_poly(g)));
  const bool in_f0 = is_in_F0(b);
  return {std::move(b), std::move(g), in_f0};
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::ProvenInF:
      return "proven";
    case Membership::CertificateRejected:
      return "certificate-rejected";
    case Membership::Unknown:
      return "unknown";
  }
  return "unknown";
}

FVerdict f_membership(const QuatPoly& a, const std::optional<Certificate>& certificate,
                      const std::optional<SearchOptions>& search) {
  require_nonzero(a, "f_membership");
  if (!has_coprime_components(a)) throw PreconditionError("f_membership: components of A are not coprime");

  if (certificate) {
    const ComplexPoly gamma = certificate->gamma();
    if (gamma.is_zero() || !has_coprime_components(gamma)) {
      return {Membership::CertificateRejected, "certificate (a, b) is zero or not coprime", certificate};
    }
    const F0Reduction r = reduce_to_F0(a, gamma);
    if (r.in_F0 != verify_han(a, certificate->a, certificate->b)) {
      throw InternalError("f_membership: reduce_to_F0 and the RRMF identity disagree");
    }
    if (r.in_F0) return {Membership::ProvenInF, "certificate verified via reduction to F0", certificate};
    return {Membership::CertificateRejected, "A gamma* / |gcd_H(A, gamma)|^2 is not in F0", certificate};
  }

  if (is_in_F0(a)) {
    return {Membership::ProvenInF, "A is in F0", Certificate{RealPoly::constant(Scalar(1)), RealPoly{}}};
  }
  FVerdict out;
  if (rho_eta(a).divisible) {
    out.status = Membership::ProvenInF;
    out.method = "equal-degree criterion: sigma divides rho and eta";
  }
  if (search) {
    if (auto found = search_gamma(a, *search)) {
      out.status = Membership::ProvenInF;
      out.method = out.method.empty() ? "certificate found by search" : out.method + "; certificate found by search";
      out.certificate = std::move(found);
    }
  }
  if (out.status == Membership::Unknown) out.method = "no certificate known";
  return out;
}

Classification classify(const QuatPoly& a, const std::optional<Certificate>& certificate,
                        const std::optional<SearchOptions>& search) {
  require_nonzero(a, "classify");
  Classification out;
  out.in_widetilde = has_coprime_components(a);
  out.primitive = is_primitive(a);
  const CoreDecomposition cd = core_of(a);
  out.core_degree = cd.core.degree();
  out.chi = cd.chi;
  out.planar = is_planar(a);
  out.notes = "regularity (real zeros of sigma) not checked";
  if (!out.in_widetilde) {
    out.in_F.method = "components of A are not coprime";
    return out;
  }
  out.in_F0 = is_in_F0(a);
  out.trivial_witness = is_trivial(a);
  out.in_F = f_membership(a, certificate, search);
  if (out.in_F.status == Membership::ProvenInF && out.in_F.certificate) out.han_certificate = out.in_F.certificate;
  if (out.in_F.status == Membership::ProvenInF && out.planar != is_trivial(cd.core).has_value()) {
    throw InternalError("classify: planarity disagrees with triviality of the core");
  }
  return out;
}

}  // namespace rrmf

#include "rrmf/construct.hpp"

#include "rrmf/hodograph.hpp"
#include "rrmf/linalg.hpp"

namespace rrmf {

namespace {

const Quaternion kI = Quaternion::i();

std::vector<Scalar> as_row(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

std::size_t span_dim(std::initializer_list<Quaternion> qs) {
  ScalarMatrix rows;
  for (const auto& q : qs) rows.push_back(as_row(q));
  return exact_rank(std::move(rows));
}

void require_jk_plane(const Quaternion& q, const char* name) {
  if (!q.x.is_zero()) throw PreconditionError(std::string(name) + " must lie in R + Rj + Rk");
}

void require_nonzero_factor(const Quaternion& c) {
  if (c.is_zero()) throw PreconditionError("left factor C must be nonzero");
}

// Vector part of A3 (or A0) parallel to (A1 i) x (A2 i) with prescribed i-component.
Quaternion parallel_with_i_component(const Quaternion& a1, const Quaternion& a2, const Scalar& i_component) {
  const Quaternion w = cross(a1 * kI, a2 * kI);
  if (w.x.is_zero()) {
    if (!i_component.is_zero()) throw PreconditionError("(A1 i)x(A2 i) has no i-component: no solution");
    throw PreconditionError("(A1 i)x(A2 i) has no i-component: underdetermined family");
  }
  return (i_component / w.x) * w;
}

}  // namespace

QuatPoly make_trivial(const Quaternion& left_factor, const Quaternion& direction,
                      const std::vector<std::pair<Scalar, Scalar>>& coeffs) {
  require_nonzero_factor(left_factor);
  if (!direction.is_pure() || direction.is_zero()) throw PreconditionError("u must be a nonzero vector");
  if (!direction.x.is_zero()) throw PreconditionError("u must be orthogonal to i");
  std::vector<Quaternion> out;
  out.reserve(coeffs.size());
  for (const auto& [x, y] : coeffs) out.push_back(left_factor * (Quaternion(x) + y * direction));
  QuatPoly a(std::move(out));
  if (!has_coprime_components(a)) throw PreconditionError("make_trivial: components are not coprime");
  return a;
}

QuatPoly make_cubic(const CubicSpec& spec) {
  require_nonzero_factor(spec.left_factor);
  require_jk_plane(spec.a1, "A1");
  require_jk_plane(spec.a2, "A2");
  if (span_dim({Quaternion(1), spec.a1, spec.a2}) != 3) throw PreconditionError("1, A1, A2 do not span R + Rj + Rk");
  const Scalar third = Scalar(1, 3) * quat_inner(spec.a1, spec.a2 * kI);
  const Quaternion a3 = Quaternion(spec.s3) + parallel_with_i_component(spec.a1, spec.a2, third);
  return QuatPoly{Quaternion(1), spec.a1, spec.a2, a3}.left_mul(spec.left_factor);
}

QuatPoly make_cubic_monic(const Quaternion& a1, const Quaternion& a2, const Scalar& s0) {
  require_jk_plane(a1, "A1");
  require_jk_plane(a2, "A2");
  if (span_dim({Quaternion(1), a1, a2}) != 3) throw PreconditionError("1, A1, A2 do not span R + Rj + Rk");
  const Scalar third = Scalar(-1, 3) * quat_inner(a1, a2 * kI);
  const Quaternion a0 = Quaternion(s0) + parallel_with_i_component(a1, a2, third);
  return QuatPoly{a0, a1, a2, Quaternion(1)};
}

QuarticResult make_quartic(const QuarticSpec& spec) {
  require_nonzero_factor(spec.left_factor);
  require_jk_plane(spec.a1, "A1");
  require_jk_plane(spec.a2, "A2");
  const Quaternion& a1 = spec.a1;
  const Quaternion& a2 = spec.a2;
  const Quaternion a3(spec.s3, Scalar(1, 3) * quat_inner(a1, a2 * kI), spec.a3_j, spec.a3_k);

  // Remaining conditions c_3 = ... = c_6 = 0, linear in A4:
  //   <A4, A2 i> = 0,  <A4, A3 i> = 0,  <A4, i> = (1/2) <A1, A3 i>,
  //   <A1 i, A4> = (1/3) <A2, A3 i>   (from c_4 = <A2, A3 i> - 3 <A1 i, A4>).
  const ScalarMatrix m{as_row(a2 * kI), as_row(a3 * kI), as_row(kI), as_row(a1 * kI)};
  const std::vector<Scalar> rhs{Scalar(), Scalar(), Scalar(1, 2) * quat_inner(a1, a3 * kI),
                                Scalar(1, 3) * quat_inner(a2, a3 * kI)};
  const auto sol = solve_exact(m, rhs);
  if (!sol) throw PreconditionError("make_quartic: the conditions on A4 are inconsistent");
  auto as_quat = [](const std::vector<Scalar>& x) { return Quaternion(x[0], x[1], x[2], x[3]); };
  Quaternion a4 = as_quat(sol->particular);
  if (a4.is_zero() && !sol->kernel.empty()) a4 = as_quat(sol->kernel.front());

  QuarticResult out;
  out.poly = QuatPoly{Quaternion(1), a1, a2, a3, a4}.left_mul(spec.left_factor);
  if (out.poly.degree() != 4) throw PreconditionError("make_quartic: the solved A4 vanishes, degree drops");
  out.family_dimension = sol->nullity;
  for (const auto& k : sol->kernel) out.family.push_back(as_quat(k));
  const std::size_t low = span_dim({Quaternion(1), a1, a2});
  out.nontrivial = low == 3 || (low <= 2 && span_dim({Quaternion(1), a1, a2, a3}) == 3);
  return out;
}

QuatPoly make_family_n(int n) {
  if (n < 3) throw PreconditionError("make_family_n: n must be at least 3");
  std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
  c[0] = Quaternion(1);
  c[1] = Quaternion::j();
  c[n - 1] = Scalar(n) * Quaternion::k();
  c[n] = Scalar(n - 2) * Quaternion::i();
  return QuatPoly(std::move(c));
}

FElement make_f_element(const QuatPoly& b0, const ComplexPoly& delta) {
  if (!is_in_F0(b0)) throw PreconditionError("make_f_element: B0 is not in F0");
  if (!has_coprime_components(delta)) throw PreconditionError("make_f_element: delta has non-coprime components");
  const CoreDecomposition cd = core_of(b0);
  const ComplexPoly& mu = cd.chi;
  const ComplexPoly g = gcd_complex({mu, delta});
  const ComplexPoly nu = exact_divide(conjugate(mu) * delta, to_complex(norm_poly(g)));
  QuatPoly a = cd.core * to_quat(delta);
  if (!has_coprime_components(a)) throw PreconditionError("make_f_element: core * delta has non-coprime components");
  return {std::move(a), Certificate::from_gamma(nu)};
}

}  // namespace rrmf

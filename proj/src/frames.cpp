#include "rrmf/frames.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rrmf/indicatrix.hpp"

namespace rrmf {

namespace {

RealPoly vdot(const VectorPoly& a, const VectorPoly& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

VectorPoly vderiv(const VectorPoly& a) { return {a.x.derivative(), a.y.derivative(), a.z.derivative()}; }

SymbolicFrame frame_of(const QuatPoly& b) {
  if (b.is_zero()) throw PreconditionError("frame of the zero polynomial");
  SymbolicFrame out;
  out.denominator = norm_poly(b);
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (std::size_t r = 0; r < 3; ++r) {
    out.numerators[r] = sandwich(b, units[r]);
    const VectorPoly& n = out.numerators[r];
    out.f[r] = {reduce_fraction(n.x, out.denominator), reduce_fraction(n.y, out.denominator),
                reduce_fraction(n.z, out.denominator)};
  }
  return out;
}

QuatPoly rmf_generator(const QuatPoly& a, const RealPoly& ca, const RealPoly& cb) {
  return a * to_quat(make_complex(ca, -cb));
}

using ld = long double;
using Vec3 = std::array<double, 3>;

ld horner(const std::vector<ld>& c, ld x) {
  ld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<ld> to_ld(const RealPoly& p) {
  std::vector<ld> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_double());
  return out;
}

// Scale against which "sigma(xi) = 0" is judged.
ld magnitude(const std::vector<ld>& c, ld x) {
  ld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * std::fabs(x) + std::fabs(*it);
  return acc;
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

class Evaluator {
 public:
  Evaluator(const QuatPoly& a, const SampleOptions& opts) : opts_(opts) {
    QuatPoly gen = a;
    if (opts.kind == FrameKind::Rmf) {
      if (!opts.certificate) throw PreconditionError("rmf sampling needs a certificate (a, b)");
      if (!verify_han(a, opts.certificate->a, opts.certificate->b)) {
        throw PreconditionError("rmf sampling: certificate fails the RRMF condition");
      }
      gen = rmf_generator(a, opts.certificate->a, opts.certificate->b);
    }
    const QuatComponents c = components(gen);
    comp_ = {to_ld(c.u), to_ld(c.v), to_ld(c.p), to_ld(c.q)};
    const Hodograph h = hodograph_of(a);
    sigma_ = to_ld(h.sigma);
    dsigma_ = to_ld(h.sigma.derivative());
    hodo_ = {to_ld(h.xprime), to_ld(h.yprime), to_ld(h.zprime)};
    hodo2_ = {to_ld(h.xprime.derivative()), to_ld(h.yprime.derivative()), to_ld(h.zprime.derivative())};
    const CurvePosition pos = integrate(h);
    pos_ = {to_ld(pos.x), to_ld(pos.y), to_ld(pos.z)};
  }

  // Frame at xi, or an explanation of why it is undefined there.
  std::optional<std::array<Vec3, 3>> frame(double xi, std::string& why) const {
    const ld s = horner(sigma_, xi);
    if (std::fabs(s) <= 1e-14L * magnitude(sigma_, xi)) {
      why = "sigma vanishes";
      return std::nullopt;
    }
    std::array<Vec3, 3> f{};
    if (opts_.kind == FrameKind::Frenet) {
      Vec3 d1{}, d2{};
      for (std::size_t r = 0; r < 3; ++r) {
        d1[r] = static_cast<double>(horner(hodo_[r], xi));
        d2[r] = static_cast<double>(horner(hodo2_[r], xi));
      }
      const double sd = static_cast<double>(s), dsd = static_cast<double>(horner(dsigma_, xi));
      Vec3 n{};
      for (std::size_t r = 0; r < 3; ++r) n[r] = sd * d2[r] - dsd * d1[r];
      const double nn = std::sqrt(dot3(n, n));
      const double scale = sd * std::sqrt(dot3(d2, d2)) + std::fabs(dsd) * sd;
      if (nn == 0 || nn <= 1e-12 * scale) {
        why = "curvature vanishes";
        return std::nullopt;
      }
      for (std::size_t r = 0; r < 3; ++r) {
        f[0][r] = d1[r] / sd;
        f[1][r] = n[r] / nn;
      }
      f[2] = cross3(f[0], f[1]);
    } else {
      const ld w = horner(comp_[0], xi), x = horner(comp_[1], xi), y = horner(comp_[2], xi),
               z = horner(comp_[3], xi);
      const ld n = w * w + x * x + y * y + z * z;
      const ld m[3][3] = {{w * w + x * x - y * y - z * z, 2 * (x * y + w * z), 2 * (x * z - w * y)},
                          {2 * (x * y - w * z), w * w - x * x + y * y - z * z, 2 * (y * z + w * x)},
                          {2 * (x * z + w * y), 2 * (y * z - w * x), w * w - x * x - y * y + z * z}};
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) f[r][c] = static_cast<double>(m[r][c] / n);
      }
    }
    if (opts_.normal_rotation != 0) {
      const double cs = std::cos(opts_.normal_rotation), sn = std::sin(opts_.normal_rotation);
      const Vec3 e2 = f[1], e3 = f[2];
      for (std::size_t c = 0; c < 3; ++c) {
        f[1][c] = cs * e2[c] + sn * e3[c];
        f[2][c] = -sn * e2[c] + cs * e3[c];
      }
    }
    return f;
  }

  std::array<double, 3> position(double xi) const {
    return {static_cast<double>(horner(pos_[0], xi)), static_cast<double>(horner(pos_[1], xi)),
            static_cast<double>(horner(pos_[2], xi))};
  }

 private:
  SampleOptions opts_;
  std::array<std::vector<ld>, 4> comp_;
  std::vector<ld> sigma_, dsigma_;
  std::array<std::vector<ld>, 3> hodo_, hodo2_, pos_;
};

void check_orthonormal(const std::array<Vec3, 3>& f, double tol, double xi) {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = r; c < 3; ++c) {
      const double target = r == c ? 1.0 : 0.0;
      if (std::fabs(dot3(f[r], f[c]) - target) > tol) {
        std::ostringstream msg;
        msg << "sampled frame not orthonormal at xi = " << xi;
        throw InternalError(msg.str());
      }
    }
  }
  const Vec3 c = cross3(f[0], f[1]);
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::fabs(c[k] - f[2][k]) > tol) throw InternalError("sampled frame is not right-handed");
  }
}

void put(std::ostream& os, double v) {
  if (v == 0) v = 0;  // no "-0" in the output
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  os.write(buf, res.ptr - buf);
}

}  // namespace

SymbolicFrame erf_symbolic(const QuatPoly& a) { return frame_of(a); }

SymbolicFrame rmf_symbolic(const QuatPoly& a, const RealPoly& ca, const RealPoly& cb) {
  if (!verify_han(a, ca, cb)) throw PreconditionError("rmf_symbolic: (a, b) fails the RRMF condition");
  return frame_of(rmf_generator(a, ca, cb));
}

std::array<RationalVector, 2> rotate_frame(const QuatPoly& a, const RealPoly& ca, const RealPoly& cb) {
  if (ca.is_zero() && cb.is_zero()) throw PreconditionError("rotate_frame: a = b = 0");
  if (!gcd_real({ca, cb}).is_one()) throw PreconditionError("rotate_frame: gcd(a, b) != 1");
  const SymbolicFrame e = erf_symbolic(a);
  const RealPoly n2 = ca * ca + cb * cb;
  const RationalFunction c = reduce_fraction(ca * ca - cb * cb, n2);
  const RationalFunction s = reduce_fraction((ca * cb).scaled(Scalar(2)), n2);
  std::array<RationalVector, 2> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[0][k] = c * e.f[1][k] - s * e.f[2][k];
    out[1][k] = s * e.f[1][k] + c * e.f[2][k];
  }
  return out;
}

RationalFunction dot(const RationalVector& x, const RationalVector& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

bool is_orthonormal(const SymbolicFrame& frame) {
  const RationalFunction one = reduce_fraction(RealPoly::constant(Scalar(1)), RealPoly::constant(Scalar(1)));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = r; c < 3; ++c) {
      const RationalFunction d = dot(frame.f[r], frame.f[c]);
      if (r == c ? !(d == one) : !d.is_zero()) return false;
    }
  }
  return true;
}

RealPoly twist_numerator(const SymbolicFrame& frame) {
  const VectorPoly& n2 = frame.numerators[1];
  const VectorPoly& n3 = frame.numerators[2];
  return vdot(n3, vderiv(n2)) * frame.denominator - vdot(n3, n2) * frame.denominator.derivative();
}

std::optional<FrameKind> parse_frame_kind(const std::string& text) {
  if (text == "erf") return FrameKind::Erf;
  if (text == "rmf") return FrameKind::Rmf;
  if (text == "frenet") return FrameKind::Frenet;
  return std::nullopt;
}

std::string to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::Erf:
      return "erf";
    case FrameKind::Rmf:
      return "rmf";
    case FrameKind::Frenet:
      return "frenet";
  }
  return "erf";
}

SampleReport sample_frames(const QuatPoly& a, const std::vector<double>& xi_values, const SampleOptions& opts) {
  if (a.is_zero()) throw PreconditionError("sample_frames: A must be nonzero");
  const Evaluator ev(a, opts);
  SampleReport out;
  for (const double xi : xi_values) {
    std::string why;
    const auto f = ev.frame(xi, why);
    if (!f) {
      std::ostringstream msg;
      msg << "skipped xi = " << xi << ": " << why;
      out.warnings.push_back(msg.str());
      continue;
    }
    check_orthonormal(*f, opts.tolerance, xi);
    out.samples.push_back({xi, ev.position(xi), *f});
  }
  return out;
}

double sampled_twist(const QuatPoly& a, double xi, double h, const SampleOptions& opts) {
  const Evaluator ev(a, opts);
  std::string why;
  const auto lo = ev.frame(xi - h, why), mid = ev.frame(xi, why), hi = ev.frame(xi + h, why);
  if (!lo || !mid || !hi) throw PreconditionError("sampled_twist: frame undefined near xi (" + why + ")");
  Vec3 d{};
  for (std::size_t k = 0; k < 3; ++k) d[k] = ((*hi)[1][k] - (*lo)[1][k]) / (2 * h);
  return dot3((*mid)[2], d);
}

void write_csv(std::ostream& os, const std::vector<FrameSample>& samples) {
  os << "xi,px,py,pz,f1x,f1y,f1z,f2x,f2y,f2z,f3x,f3y,f3z\n";
  for (const auto& s : samples) {
    put(os, s.xi);
    for (const double v : s.position) {
      os << ',';
      put(os, v);
    }
    for (const auto& row : s.f) {
      for (const double v : row) {
        os << ',';
        put(os, v);
      }
    }
    os << '\n';
  }
}

}  // namespace rrmf

#include "rrmf/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

#include "rrmf/errors.hpp"

namespace rrmf {

namespace {

unsigned combine_base(unsigned a, unsigned b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw SurdMismatch("scalars over sqrt(" + std::to_string(a) + ") and sqrt(" +
                     std::to_string(b) + ") cannot be mixed");
}

}  // namespace

bool is_valid_surd_base(unsigned base) {
  if (base == 0) return true;
  if (base < 2) return false;
  for (unsigned p = 2; p * p <= base; ++p) {
    if (base % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(long num, long den) : rational_(num, den) {
  if (den == 0) throw PreconditionError("zero denominator");
  rational_.canonicalize();
}

Scalar::Scalar(mpq_class rational, mpq_class surd, unsigned base)
    : rational_(std::move(rational)), surd_(std::move(surd)), base_(base) {
  if (!is_valid_surd_base(base)) {
    throw PreconditionError("surd base must be 0 or squarefree >= 2, got " + std::to_string(base));
  }
  rational_.canonicalize();
  surd_.canonicalize();
  if (base_ == 0 && sgn(surd_) != 0) throw PreconditionError("nonzero surd part with base 0");
}

Scalar Scalar::sqrt_of(unsigned base, mpq_class coefficient) {
  if (base == 0) throw PreconditionError("sqrt_of needs a nonzero base");
  return Scalar(0, std::move(coefficient), base);
}

int Scalar::sign() const {
  const int sr = sgn(rational_);
  const int ss = sgn(surd_);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: compare r^2 against s^2 d.
  const mpq_class r2 = rational_ * rational_;
  const mpq_class s2d = surd_ * surd_ * base_;
  const int c = cmp(r2, s2d);
  return c > 0 ? sr : ss;  // r^2 == s^2 d is impossible for squarefree d
}

Scalar Scalar::conjugate_surd() const {
  Scalar out = *this;
  out.surd_ = -out.surd_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero scalar");
  if (sgn(surd_) == 0) {
    Scalar out = *this;
    out.rational_ = 1 / rational_;
    return out;
  }
  const mpq_class norm = rational_ * rational_ - surd_ * surd_ * base_;
  Scalar out = *this;
  out.rational_ = rational_ / norm;
  out.surd_ = -surd_ / norm;
  return out;
}

double Scalar::to_double() const {
  double v = rational_.get_d();
  if (sgn(surd_) != 0) v += surd_.get_d() * std::sqrt(static_cast<double>(base_));
  return v;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  base_ = combine_base(base_, o.base_);
  rational_ += o.rational_;
  if (sgn(o.surd_) != 0) surd_ += o.surd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  base_ = combine_base(base_, o.base_);
  rational_ -= o.rational_;
  if (sgn(o.surd_) != 0) surd_ -= o.surd_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  base_ = combine_base(base_, o.base_);
  if (sgn(surd_) == 0 && sgn(o.surd_) == 0) {
    rational_ *= o.rational_;
    return *this;
  }
  mpq_class r = rational_ * o.rational_ + surd_ * o.surd_ * base_;
  mpq_class s = rational_ * o.surd_ + surd_ * o.rational_;
  rational_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  base_ = combine_base(base_, o.base_);
  if (sgn(o.surd_) == 0) {
    if (sgn(o.rational_) == 0) throw PreconditionError("division by zero scalar");
    rational_ /= o.rational_;
    if (sgn(surd_) != 0) surd_ /= o.rational_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.rational_ = -out.rational_;
  out.surd_ = -out.surd_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  combine_base(a.base_, b.base_);
  return a.rational_ == b.rational_ && a.surd_ == b.surd_;
}

std::string Scalar::to_string() const {
  std::string out;
  const bool has_surd = sgn(surd_) != 0;
  if (!has_surd || sgn(rational_) != 0) out = rational_.get_str();
  if (has_surd) {
    if (sgn(surd_) > 0 && !out.empty()) out += '+';
    out += surd_.get_str() + "*sqrt(" + std::to_string(base_) + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, unsigned base) : text_(text), base_(base) {}

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    mpq_class rational = 0;
    mpq_class surd = 0;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      mpq_class coeff = 1;
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        have_number = true;
      }
      bool is_surd = false;
      if (peek() == '*' || (!have_number && peek() == 's')) {
        if (peek() == '*') ++pos_;
        expect_word("sqrt(");
        const unsigned long d = integer_digits();
        expect_word(")");
        if (d != base_ || base_ == 0) {
          fail("sqrt(" + std::to_string(d) + ") does not match the document base " +
               std::to_string(base_));
        }
        is_surd = true;
      } else if (!have_number) {
        fail("expected a number");
      }
      (is_surd ? surd : rational) += sign * coeff;
    }
    return base_ == 0 ? Scalar(rational) : Scalar(rational, surd, base_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad scalar '" + std::string(text_) + "': " + why);
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  unsigned long integer_digits() {
    const size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class number() {
    const size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      const size_t ds = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) fail("expected denominator digits");
      den = mpz_class(std::string(text_.substr(ds, pos_ - ds)));
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  unsigned base_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, unsigned base) {
  if (!is_valid_surd_base(base)) throw ParseError("invalid surd base " + std::to_string(base));
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw ParseError("empty scalar");
  text = text.substr(first, text.find_last_not_of(" \t\n") - first + 1);
  return ScalarParser(text, base).parse();
}

}  // namespace rrmf

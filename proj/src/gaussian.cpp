#include "expnev/gaussian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace expnev {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("GaussianRational: division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::complex<long double> GaussianRational::to_complex_ld() const {
  // mpq -> long double via mpf keeps more bits than get_d().
  mpf_class r(re_, 128), m(im_, 128);
  long exp_r = 0, exp_m = 0;
  double dr = mpf_get_d_2exp(&exp_r, r.get_mpf_t());
  double dm = mpf_get_d_2exp(&exp_m, m.get_mpf_t());
  // Second limb of precision for the mantissa.
  mpf_class rr = r - mpf_class(std::ldexp(dr, static_cast<int>(exp_r)), 128);
  mpf_class mr = m - mpf_class(std::ldexp(dm, static_cast<int>(exp_m)), 128);
  long double lr = std::ldexp(static_cast<long double>(dr), static_cast<int>(exp_r)) + rr.get_d();
  long double lm = std::ldexp(static_cast<long double>(dm), static_cast<int>(exp_m)) + mr.get_d();
  return {lr, lm};
}

mpz_class GaussianRational::common_denominator() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
  return l;
}

std::string GaussianRational::str() const {
  mpz_class c = common_denominator();
  mpz_class a = re_.get_num() * (c / re_.get_den());
  mpz_class b = im_.get_num() * (c / im_.get_den());
  std::ostringstream os;
  auto imag_part = [&](const mpz_class& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "i";
  };
  if (sgn(b) == 0) {
    os << a.get_str();
    if (c != 1) os << '/' << c.get_str();
  } else if (sgn(a) == 0) {
    os << imag_part(b);
    if (c != 1) os << '/' << c.get_str();
  } else {
    std::string body = a.get_str() + (sgn(b) > 0 ? "+" : "") + imag_part(b);
    if (c != 1)
      os << '(' << body << ")/" << c.get_str();
    else
      os << body;
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_end() const { return pos >= s.size(); }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed gaussian rational '" + std::string(s) + "' at offset " +
                                std::to_string(pos));
  }
  mpz_class integer() {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos) fail();
    return mpz_class(std::string(s.substr(start, pos - start)));
  }
};

// signed term: [-]digits[i] | [-]i
GaussianRational parse_signed_term(Cursor& c, bool negative) {
  mpz_class v = 1;
  if (!(c.pos < c.s.size() && c.s[c.pos] == 'i')) v = c.integer();
  if (negative) v = -v;
  if (c.eat('i')) return {mpq_class(0), mpq_class(v)};
  return {mpq_class(v), mpq_class(0)};
}

}  // namespace

GaussianRational GaussianRational::from_string(std::string_view text) {
  Cursor c{text};
  bool paren = c.eat('(');
  GaussianRational acc;
  bool first = true;
  while (!c.at_end() && c.s[c.pos] != ')' && c.s[c.pos] != '/') {
    bool neg = false;
    if (c.eat('-'))
      neg = true;
    else if (!first && !c.eat('+'))
      c.fail();
    acc += parse_signed_term(c, neg);
    first = false;
  }
  if (first) c.fail();
  if (paren && !c.eat(')')) c.fail();
  if (c.eat('/')) {
    mpz_class d = c.integer();
    if (d == 0) c.fail();
    acc /= GaussianRational(mpq_class(d));
  }
  if (!c.at_end()) c.fail();
  return acc;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

}  // namespace expnev

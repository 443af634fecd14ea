#include "expnev/ratfunc.hpp"

#include <stdexcept>

namespace expnev {

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly::constant(GR(1));
    return;
  }
  if (den_.degree() > 0) {
    ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    GR inv = GR(1) / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GR RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc is not a constant");
  return num_.is_zero() ? GR(0) : num_.coeffs()[0];
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    if (!num_.is_zero()) return *this;
    den_ = ZPoly::constant(GR(1));
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GR RatFunc::evaluate(const GR& z0) const {
  GR d = den_.evaluate(z0);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.evaluate(z0) / d;
}

std::complex<double> RatFunc::evaluate(std::complex<double> z0) const {
  return zpoly::eval(num_, z0) / zpoly::eval(den_, z0);
}

std::string RatFunc::render() const {
  if (is_polynomial()) return zpoly::render(num_);
  return "(" + zpoly::render(num_) + ")/(" + zpoly::render(den_) + ")";
}

bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
  if (zpoly::less(a.den(), b.den())) return true;
  if (zpoly::less(b.den(), a.den())) return false;
  return zpoly::less(a.num(), b.num());
}

}  // namespace expnev

#include "expnev/ypoly.hpp"

#include "expnev/errors.hpp"

namespace expnev {

YPoly::YPoly(std::size_t arity, std::vector<LaurentPoly> coeffs) : arity_(arity), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.arity() != arity_) throw std::invalid_argument("YPoly: coefficient arity mismatch");
  trim();
}

void YPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LaurentPoly YPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return LaurentPoly(arity_);
  return c_[static_cast<std::size_t>(k)];
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), LaurentPoly(arity_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), LaurentPoly(arity_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return YPoly(a.arity_);
  std::vector<LaurentPoly> out(a.c_.size() + b.c_.size() - 1, LaurentPoly(a.arity_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return YPoly(a.arity_, std::move(out));
}

YPoly YPoly::scaled(const LaurentPoly& s) const {
  std::vector<LaurentPoly> out;
  for (const auto& c : c_) out.push_back(c * s);
  return YPoly(arity_, std::move(out));
}

YPoly YPoly::derivative() const {
  std::vector<LaurentPoly> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k].scaled(RatFunc(static_cast<long>(k))));
  return YPoly(arity_, std::move(out));
}

LaurentPoly YPoly::evaluate(const LaurentPoly& y) const {
  LaurentPoly acc(arity_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

YPoly YPoly::compose_linear(const LaurentPoly& a, const LaurentPoly& b) const {
  const YPoly lin(arity_, {b, a});
  YPoly acc(arity_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + YPoly(arity_, {*it});
  return acc;
}

MonicYPoly::MonicYPoly(std::size_t arity, std::vector<LaurentPoly> lower)
    : arity_(arity), lower_(std::move(lower)) {
  if (lower_.empty()) throw PreconditionError("MonicYPoly: degree must be at least 1");
  for (const auto& c : lower_)
    if (c.arity() != arity_) throw std::invalid_argument("MonicYPoly: coefficient arity mismatch");
}

MonicYPoly MonicYPoly::from_ypoly(const YPoly& p) {
  if (p.degree() < 1) throw PreconditionError("polynomial in Y must have degree at least 1");
  const LaurentPoly& lc = p.leading();
  if (!(lc.is_constant() && lc.constant_term().is_one()))
    throw PreconditionError("polynomial in Y must be monic");
  std::vector<LaurentPoly> lower(p.coeffs().begin(), p.coeffs().end() - 1);
  return MonicYPoly(p.arity(), std::move(lower));
}

YPoly MonicYPoly::to_ypoly() const {
  std::vector<LaurentPoly> c = lower_;
  c.push_back(LaurentPoly::constant(arity_, RatFunc(1)));
  return YPoly(arity_, std::move(c));
}

}  // namespace expnev

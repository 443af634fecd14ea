#include "expnev/numeric/function.hpp"

#include <algorithm>
#include <limits>

#include "expnev/algebra.hpp"

namespace expnev::numeric {

namespace {

std::vector<cd> to_numeric(const ZPoly& p) {
  std::vector<cd> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

cd horner(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

ExpPolyFunction::ExpPolyFunction(LaurentPoly body, UnitBasis basis)
    : body_(std::move(body)), basis_(std::move(basis)), den_(ZPoly::constant(GR(1))) {
  if (body_.arity() != basis_.size()) throw std::invalid_argument("ExpPolyFunction: arity does not match basis");
  const LaurentPoly d = derivation_Du(body_, basis_);
  for (const auto& [e, a] : body_.terms()) {
    ZPoly freq;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) freq += basis_.frequency(j).scaled(GR(e[j]));
    const RatFunc b = d.coefficient(e);
    terms_.push_back({to_numeric(freq), to_numeric(a.num()), to_numeric(a.den()), to_numeric(b.num()),
                      to_numeric(b.den())});
    den_ = (den_ * a.den()).divmod(gcd(den_, a.den())).first.monic();
  }
  if (den_.degree() > 0)
    for (const auto& r : zpoly::numeric_roots(den_)) poles_.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

bool ExpPolyFunction::is_rational() const {
  return std::all_of(body_.terms().begin(), body_.terms().end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int v) { return v == 0; });
  });
}

template <bool WithDerivative>
void ExpPolyFunction::eval(cd z, Scaled& f, cd* df) const {
  if (terms_.empty()) {
    f = {0, 0};
    if (df) *df = 0;
    return;
  }
  std::vector<cd> w(terms_.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    w[t] = horner(terms_[t].freq, z);
    top = std::max(top, w[t].real());
  }
  cd sum = 0, dsum = 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const cd e = std::exp(w[t] - top);
    const Term& tm = terms_[t];
    sum += horner(tm.num, z) / horner(tm.den, z) * e;
    if constexpr (WithDerivative) {
      if (!tm.dnum.empty()) dsum += horner(tm.dnum, z) / horner(tm.dden, z) * e;
    }
  }
  f = {sum, top};
  if constexpr (WithDerivative) *df = dsum;
}

cd ExpPolyFunction::operator()(cd z) const {
  Scaled s;
  eval<false>(z, s, nullptr);
  return s.mantissa * std::exp(s.log_scale);
}

cd ExpPolyFunction::derivative(cd z) const {
  Scaled s;
  cd d;
  eval<true>(z, s, &d);
  return d * std::exp(s.log_scale);
}

Scaled ExpPolyFunction::scaled(cd z) const {
  Scaled s;
  eval<false>(z, s, nullptr);
  return s;
}

cd ExpPolyFunction::log_derivative(cd z) const {
  Scaled s;
  cd d;
  eval<true>(z, s, &d);
  return d / s.mantissa;
}

ExpPolyFunction ExpPolyFunction::derived() const { return {derivation_Du(body_, basis_), basis_}; }

ExpPolyFunction ExpPolyFunction::cleared() const { return {body_.scaled(RatFunc(den_)), basis_}; }

ExpPolyFunction ExpPolyFunction::minus_constant(const GR& c) const {
  return {body_ - LaurentPoly::constant(body_.arity(), RatFunc(c)), basis_};
}

}  // namespace expnev::numeric

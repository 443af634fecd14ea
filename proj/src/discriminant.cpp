#include "expnev/discriminant.hpp"

#include <stdexcept>

namespace expnev {

namespace {

LaurentPoly one(std::size_t n) { return LaurentPoly::constant(n, RatFunc(1)); }

YPoly prem(const YPoly& a, const YPoly& b) {
  const int db = b.degree();
  const std::size_t n = a.arity();
  const LaurentPoly& lb = b.leading();
  YPoly r = a;
  int e = std::max(a.degree() - db + 1, 0);
  while (!r.is_zero() && r.degree() >= db) {
    const int dr = r.degree();
    std::vector<LaurentPoly> shift(static_cast<std::size_t>(dr - db) + 1, LaurentPoly(n));
    shift.back() = r.leading();
    r = r.scaled(lb) - b * YPoly(n, std::move(shift));
    --e;
  }
  for (int k = 0; k < e; ++k) r = r.scaled(lb);
  return r;
}

YPoly divexact_coeffs(const YPoly& p, const LaurentPoly& d) {
  return p.map_coefficients([&](const LaurentPoly& c) { return laurent_divexact(c, d); });
}

}  // namespace

LaurentPoly resultant(const YPoly& a_in, const YPoly& b_in) {
  const std::size_t n = a_in.arity();
  if (a_in.is_zero() || b_in.is_zero()) return LaurentPoly(n);
  YPoly a = a_in, b = b_in;
  LaurentPoly sign = one(n);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
  }
  if (b.degree() == 0) return sign * b.leading().pow(static_cast<unsigned>(a.degree()));

  LaurentPoly g = one(n), h = one(n);
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    YPoly r = prem(a, b);
    a = b;
    // b = r / (g h^delta)
    b = divexact_coeffs(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading();
    // h = h^{1-delta} g^delta
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = laurent_divexact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.is_zero()) return LaurentPoly(n);
    if (b.degree() == 0) {
      const int da = a.degree();
      // h^{1-da} lc(b)^da
      LaurentPoly num = b.leading().pow(static_cast<unsigned>(da));
      LaurentPoly res = da >= 1 ? laurent_divexact(num, h.pow(static_cast<unsigned>(da - 1))) : num;
      return sign * res;
    }
  }
}

LaurentPoly discriminant(const MonicYPoly& f) {
  const YPoly p = f.to_ypoly();
  LaurentPoly r = resultant(p, p.derivative());
  const int d = f.degree();
  if (((d * (d - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace expnev

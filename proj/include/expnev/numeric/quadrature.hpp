#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace expnev::numeric {

template <class V>
struct QuadResult {
  V value{};
  double error = 0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (non-negative half).
inline constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class V, class F>
QuadResult<V> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const V fc = f(c);
  V kron = fc * kWgk[7];
  V gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const V f1 = f(c - dx), f2 = f(c + dx);
    kron += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  QuadResult<V> r;
  r.value = kron * h;
  r.error = magnitude((kron - gauss) * h);
  r.intervals = 1;
  return r;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 quadrature of f over [a, b].  V is
/// double or std::complex<double>.  Stops when the summed error estimate is
/// below max(abs_tol, rel_tol * |value|) or max_intervals is reached; a
/// non-finite sample aborts with converged = false.
template <class V, class F>
QuadResult<V> integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0, int max_intervals = 4000) {
  struct Piece {
    double a, b;
    QuadResult<V> q;
    bool operator<(const Piece& o) const { return q.error < o.q.error; }
  };
  std::priority_queue<Piece> heap;
  QuadResult<V> first = detail::gk15<V>(f, a, b);
  heap.push({a, b, first});
  V total = first.value;
  double err = first.error;
  int count = 1;
  auto finite = [](const V& v) {
    if constexpr (std::is_same_v<V, double>) return std::isfinite(v);
    else return std::isfinite(v.real()) && std::isfinite(v.imag());
  };
  while (true) {
    if (!finite(total) || !std::isfinite(err)) return {total, err, count, false};
    if (err <= std::max(abs_tol, rel_tol * detail::magnitude(total))) return {total, err, count, true};
    if (count >= max_intervals) return {total, err, count, false};
    Piece p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) return {total, err, count, false};
    QuadResult<V> l = detail::gk15<V>(f, p.a, m), r = detail::gk15<V>(f, m, p.b);
    total += l.value + r.value - p.q.value;
    err += l.error + r.error - p.q.error;
    heap.push({p.a, m, l});
    heap.push({m, p.b, r});
    ++count;
  }
}

}  // namespace expnev::numeric

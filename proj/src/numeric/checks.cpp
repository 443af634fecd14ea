#include "expnev/numeric/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "expnev/algebra.hpp"
#include "expnev/errors.hpp"
#include "expnev/jacobian.hpp"
#include "expnev/numeric/quadrature.hpp"
#include "expnev/zpoly.hpp"

namespace expnev::numeric {

namespace {

double log_plus(double v) { return v > 1 ? std::log(v) : 0.0; }

CheckReport start(std::string name, std::string rule, const std::vector<double>& grid) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.rule = std::move(rule);
  rep.r = grid;
  return rep;
}

CheckReport& fail_precondition(CheckReport& rep, std::string why) {
  rep.preconditions_ok = false;
  rep.diagnostics.push_back(std::move(why));
  rep.r.clear();
  rep.pass = false;
  return rep;
}

CheckReport& finish(CheckReport& rep) {
  rep.pass = evaluate_verdict(rep);
  return rep;
}

std::vector<ExpPolyFunction> unit_functions(const UnitBasis& basis) {
  std::vector<ExpPolyFunction> us;
  for (std::size_t j = 0; j < basis.size(); ++j) us.emplace_back(LaurentPoly::variable(basis.size(), j), basis);
  return us;
}

double unit_map_characteristic(const UnitBasis& basis, double r) {
  std::vector<ExpPolyFunction> comps = {ExpPolyFunction(LaurentPoly::constant(basis.size(), RatFunc(1)), basis)};
  for (auto& u : unit_functions(basis)) comps.push_back(std::move(u));
  return characteristic_map(comps, r);
}

bool is_unit(const LaurentPoly& g) { return g.is_monomial(); }

int total_degree(const LaurentPoly& g) {
  int deg = 0;
  for (const auto& [e, c] : g.terms()) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

// ---- numeric forms for the transversality check ----

cd ipow(cd x, int k) {
  cd out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

struct NumForm {
  std::vector<std::pair<Exponent, cd>> terms;
  int degree = 0;

  cd operator()(const std::vector<cd>& p) const {
    cd acc = 0;
    for (const auto& [e, c] : terms) {
      cd t = c;
      for (std::size_t j = 0; j < e.size(); ++j) t *= ipow(p[j], e[j]);
      acc += t;
    }
    return acc;
  }
  cd partial(std::size_t k, const std::vector<cd>& p) const {
    cd acc = 0;
    for (const auto& [e, c] : terms) {
      if (e[k] == 0) continue;
      cd t = c * static_cast<double>(e[k]);
      for (std::size_t j = 0; j < e.size(); ++j) t *= ipow(p[j], j == k ? e[j] - 1 : e[j]);
      acc += t;
    }
    return acc;
  }
  double norm() const {
    double n = 0;
    for (const auto& t : terms) n += std::abs(t.second);
    return n;
  }
  // Coefficients in the last variable after fixing the others (ascending).
  std::vector<cd> in_last(const std::vector<cd>& fixed) const {
    const std::size_t last = fixed.size();
    int dy = 0;
    for (const auto& t : terms) dy = std::max(dy, t.first[last]);
    std::vector<cd> out(dy + 1, 0);
    for (const auto& [e, c] : terms) {
      cd t = c;
      for (std::size_t j = 0; j < last; ++j) t *= ipow(fixed[j], e[j]);
      out[e[last]] += t;
    }
    return out;
  }
};

NumForm specialize(const LaurentPoly& f, cd z0) {
  NumForm out;
  out.degree = homogeneous_degree(f);
  for (const auto& [e, c] : f.terms()) out.terms.emplace_back(e, c.evaluate(z0));
  return out;
}

std::vector<cd> roots_of(std::vector<cd> coeffs) {
  double top = 0;
  for (const cd& c : coeffs) top = std::max(top, std::abs(c));
  while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-12 * top) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  std::vector<std::complex<long double>> ld(coeffs.begin(), coeffs.end());
  std::vector<cd> out;
  for (const auto& r : zpoly::numeric_roots(ld)) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

cd det(std::vector<std::vector<cd>> m) {
  const std::size_t n = m.size();
  cd d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == cd(0)) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const cd f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Res of two polynomials with formal degrees a.size()-1 and b.size()-1.
cd sylvester(const std::vector<cd>& a, const std::vector<cd>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<cd>> s(size, std::vector<cd>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return det(s);
}

void add_point(std::vector<std::vector<cd>>& pts, std::vector<cd> p) {
  const cd scale = *std::max_element(p.begin(), p.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); });
  for (cd& c : p) c /= scale;
  for (const auto& q : pts) {
    double d = 0;
    for (std::size_t j = 0; j < p.size(); ++j) d = std::max(d, std::abs(p[j] - q[j]));
    if (d < 1e-7) return;
  }
  pts.push_back(std::move(p));
}

std::vector<std::vector<cd>> binary_points(const NumForm& f) {
  std::vector<std::vector<cd>> pts;
  const auto coeffs = f.in_last({cd(1)});
  const auto roots = roots_of(coeffs);
  for (const cd& t : roots) add_point(pts, {1, t});
  if (static_cast<int>(roots.size()) < f.degree) add_point(pts, {0, 1});
  return pts;
}

std::vector<std::vector<cd>> plane_points(const NumForm& f1, const NumForm& f2) {
  std::vector<std::vector<cd>> pts;
  // Affine chart x0 = 1: resultant in x2 sampled on the unit circle.
  const int M = f1.degree * f2.degree;
  const int N = M + 1;
  std::vector<cd> samples(N);
  for (int k = 0; k < N; ++k) {
    const cd x = std::polar(1.0, 2 * std::numbers::pi * k / N);
    samples[k] = sylvester(f1.in_last({1, x}), f2.in_last({1, x}));
  }
  std::vector<cd> res(N, 0);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) res[j] += samples[k] * std::polar(1.0, -2 * std::numbers::pi * j * k / N);
    res[j] /= static_cast<double>(N);
  }
  const double scale = std::max(1.0, f1.norm() * f2.norm());
  for (const cd& x : roots_of(res)) {
    for (cd y : roots_of(f1.in_last({1, x}))) {
      std::vector<cd> p = {1, x, y};
      // 2D Newton on (f1, f2) in (x1, x2).
      for (int it = 0; it < 30; ++it) {
        const cd a = f1(p), b = f2(p);
        const cd j11 = f1.partial(1, p), j12 = f1.partial(2, p), j21 = f2.partial(1, p), j22 = f2.partial(2, p);
        const cd dj = j11 * j22 - j12 * j21;
        if (dj == cd(0)) break;
        const cd dx = (a * j22 - b * j12) / dj, dy = (j11 * b - j21 * a) / dj;
        p[1] -= dx;
        p[2] -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1 + std::abs(p[1]) + std::abs(p[2]))) break;
      }
      if (std::abs(f1(p)) + std::abs(f2(p)) <= 1e-8 * scale * std::pow(1 + std::abs(p[1]) + std::abs(p[2]), f1.degree + f2.degree))
        add_point(pts, p);
    }
  }
  // Line at infinity x0 = 0.
  NumForm g1 = f1, g2 = f2;
  auto restrict = [](NumForm& g) {
    std::erase_if(g.terms, [](const auto& t) { return t.first[0] != 0; });
  };
  restrict(g1);
  restrict(g2);
  for (const cd& t : roots_of(g1.in_last({0, 1}))) {
    const std::vector<cd> p = {0, 1, t};
    if (std::abs(g2(p)) <= 1e-8 * scale * std::pow(1 + std::abs(t), f2.degree)) add_point(pts, p);
  }
  if (std::abs(g1({0, 0, 1})) <= 1e-12 * scale && std::abs(g2({0, 0, 1})) <= 1e-12 * scale) add_point(pts, {0, 0, 1});
  return pts;
}

}  // namespace

std::vector<ZeroSearch> common_zero_searches(const std::vector<ExpPolyFunction>& fs, double r, double tol) {
  ZeroOptions zo;
  zo.tol = tol;
  double R = r;
  for (int round = 0; round < 8; ++round) {
    std::vector<ZeroSearch> out;
    bool moved = false;
    for (const auto& f : fs) {
      out.push_back(find_zeros(f, R, zo));
      if (out.back().radius != R) {
        R = out.back().radius;
        moved = true;
        break;
      }
    }
    if (!moved) return out;
  }
  throw NumericError("no common clean radius for " + std::to_string(fs.size()) + " functions");
}

CheckReport first_main_check(const LaurentPoly& f, const UnitBasis& basis, const GR& a, const std::vector<double>& grid,
                             const CheckOptions& opts) {
  CheckReport rep = start("first_main", "oscillation", grid);
  rep.metadata["bound"] = opts.oscillation_bound;
  rep.metadata["a"] = a.str();
  const ExpPolyFunction fn(f, basis);
  const ExpPolyFunction shifted = fn.minus_constant(a);
  if (shifted.is_zero()) return fail_precondition(rep, "f is the constant a");
  std::vector<double> Ts, ms, Ns;
  for (double r : grid) {
    ZeroOptions zo;
    zo.tol = opts.zero_tol;
    const ZeroSearch zs = find_zeros(shifted, r, zo);
    const double R = zs.radius;
    const double m = proximity_to_value(fn, a, R);
    const double N = counting_function(zs.zeros, R);
    const double T = characteristic_value(fn, R);
    rep.r_used.push_back(R);
    rep.lhs.push_back(m + N);
    rep.rhs.push_back(T);
    rep.margin.push_back(m + N - T);
    Ts.push_back(T);
    ms.push_back(m);
    Ns.push_back(N);
  }
  rep.columns = {{"T", Ts}, {"m_a", ms}, {"N_a", Ns}};
  return finish(rep);
}

CheckReport logderiv_check(const LaurentPoly& f, const UnitBasis& basis, const std::vector<double>& grid,
                           const CheckOptions& opts) {
  CheckReport rep = start("logderiv", "upper_bound_top_half", grid);
  rep.metadata["eps"] = opts.eps;
  rep.metadata["C"] = opts.logderiv_constant;
  const ExpPolyFunction fn(f, basis);
  if (fn.is_zero()) return fail_precondition(rep, "f is identically zero");
  std::vector<double> Ts, ratio, tratio;
  for (double r : grid) {
    ZeroOptions zo;
    zo.tol = opts.zero_tol;
    const ZeroSearch zs = find_zeros(fn, r, zo);
    const double R = zs.radius;
    const double T = characteristic_value(fn, R);
    // m of f'/f, then its poles: distinct zeros and poles of f.
    const double m = [&] {
      const double twopi = 2 * std::numbers::pi;
      auto integrand = [&](double t) {
        const double v = std::log(std::abs(fn.log_derivative(std::polar(R, t))));
        return v > 0 ? v : 0.0;
      };
      const auto q = integrate<double>(integrand, 0.0, twopi, 1e-6 * twopi, 0.0, 20000);
      if (!q.converged) throw NumericError("proximity of f'/f did not converge");
      return q.value / twopi;
    }();
    const double N1 = counting_function(zs.zeros, R, 1) + counting_function(zs.poles, R, 1);
    const double logT = log_plus(T);
    rep.r_used.push_back(R);
    rep.lhs.push_back(m);
    const double bound = logT + (1 + opts.eps) * log_plus(logT) + opts.logderiv_constant;
    rep.rhs.push_back(bound);
    rep.margin.push_back(bound - m);
    Ts.push_back(T);
    ratio.push_back(logT > 0 ? m / logT : 0.0);
    tratio.push_back(T > 0 ? (m + N1) / T : 0.0);
  }
  rep.columns = {{"T", Ts}, {"m_over_logT", ratio}, {"T_logderiv_over_T", tratio}};
  return finish(rep);
}

CheckReport trunborel_check(const std::vector<LaurentPoly>& fs, const UnitBasis& basis,
                            const std::vector<double>& grid, const CheckOptions& opts) {
  CheckReport rep = start("trunborel", "upper_bound_top_half", grid);
  rep.metadata["C"] = opts.borel_constant;
  const std::size_t k = fs.size();
  if (k < 3) return fail_precondition(rep, "need at least three functions f_0..f_{n+1}");
  if (k > 16) return fail_precondition(rep, "at most 16 functions");
  const int n = static_cast<int>(k) - 2;
  rep.metadata["n"] = n;
  LaurentPoly total(basis.size());
  for (const auto& f : fs) total += f;
  if (!total.is_zero()) return fail_precondition(rep, "the functions do not sum to zero");
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    LaurentPoly s(basis.size());
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s += fs[i];
    if (s.is_zero()) {
      std::string which;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) which += (which.empty() ? "" : ",") + std::to_string(i);
      return fail_precondition(rep, "vanishing proper subsum {" + which + "}");
    }
  }
  rep.metadata["subsums_checked"] = (1u << k) - 2;
  std::vector<ExpPolyFunction> fns;
  for (const auto& f : fs) {
    fns.emplace_back(f, basis);
    if (fns.back().denominator().degree() > 0) return fail_precondition(rep, "components must be entire");
  }
  const std::vector<ExpPolyFunction> head(fns.begin(), fns.end() - 1);
  std::vector<std::vector<double>> per(k);
  std::vector<double> sums;
  for (double r : grid) {
    const auto zs = common_zero_searches(fns, r, opts.zero_tol);
    const double R = zs.front().radius;
    const double T = characteristic_map(head, R);
    double sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      per[i].push_back(counting_function(zs[i].zeros, R, n));
      sum += per[i].back();
    }
    rep.r_used.push_back(R);
    rep.lhs.push_back(T);
    const double bound = sum + opts.borel_constant * log_plus(T);
    rep.rhs.push_back(bound);
    rep.margin.push_back(bound - T);
    sums.push_back(sum);
  }
  rep.columns.emplace_back("sum_N_trunc", sums);
  for (std::size_t i = 0; i < k; ++i) rep.columns.emplace_back("N_trunc_" + std::to_string(i), per[i]);
  return finish(rep);
}

CheckReport smt_moving_check(const LaurentPoly& G, const UnitBasis& basis, const std::vector<double>& grid,
                             const CheckOptions& opts) {
  CheckReport rep = start("smt_moving", "smt", grid);
  rep.metadata["eps"] = opts.eps;
  rep.metadata["min_simple_ratio"] = opts.min_simple_ratio;
  rep.metadata["tail"] = opts.tail;
  if (G.arity() != basis.size()) return fail_precondition(rep, "G must use exactly x0..x" + std::to_string(basis.size() - 1));
  if (!basis.certified()) return fail_precondition(rep, "units are multiplicatively dependent");
  if (G.is_zero() || is_unit(G)) return fail_precondition(rep, "G must be a nonmonomial polynomial");
  for (const auto& [e, c] : G.terms())
    if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }))
      return fail_precondition(rep, "G must be a polynomial (no negative exponents)");
  if (!is_squarefree(G)) return fail_precondition(rep, "G has a repeated nonmonomial factor");
  // Monomial factors contribute no zeros; the degree is that of the rest.
  const int deg = total_degree(G.without_monomial_content());
  rep.metadata["degree"] = deg;
  const ExpPolyFunction fn(G, basis);
  std::vector<double> Ts, Ns, N1s, simple;
  for (double r : grid) {
    ZeroOptions zo;
    zo.tol = opts.zero_tol;
    const ZeroSearch zs = find_zeros(fn, r, zo);
    const double R = zs.radius;
    const double T = unit_map_characteristic(basis, R);
    const double N = counting_function(zs.zeros, R), N1 = counting_function(zs.zeros, R, 1);
    rep.r_used.push_back(R);
    rep.lhs.push_back((N - N1) / T);
    rep.rhs.push_back(opts.eps);
    rep.margin.push_back(opts.eps - (N - N1) / T);
    Ts.push_back(T);
    Ns.push_back(N);
    N1s.push_back(N1);
    simple.push_back(N1 / (deg * T));
  }
  rep.columns = {{"simple_ratio", simple}, {"T_u", Ts}, {"N", Ns}, {"N1", N1s}};
  return finish(rep);
}

CheckReport gcd_smallness_check(const LaurentPoly& F, const LaurentPoly& G, const UnitBasis& basis,
                                const std::vector<double>& grid, const CheckOptions& opts) {
  CheckReport rep = start("gcd_smallness", "small_trend", grid);
  rep.metadata["eps"] = opts.eps;
  if (!basis.certified()) return fail_precondition(rep, "units are multiplicatively dependent");
  if (F.is_zero() || G.is_zero()) return fail_precondition(rep, "F and G must be nonzero");
  if (!is_unit(laurent_gcd(F, G))) return fail_precondition(rep, "F and G have a common nonmonomial factor");
  const ExpPolyFunction f(F, basis), g(G, basis);
  const auto units = unit_functions(basis);
  std::vector<double> Ngs, Tmax;
  for (double r : grid) {
    const GcdCount gc = gcd_counting(f, g, r, opts.zero_tol);
    double T = 0;
    for (const auto& u : units) T = std::max(T, characteristic_value(u, gc.r_used));
    rep.r_used.push_back(gc.r_used);
    rep.lhs.push_back(T > 0 ? gc.value / T : 0.0);
    rep.rhs.push_back(opts.eps);
    rep.margin.push_back(opts.eps - rep.lhs.back());
    Ngs.push_back(gc.value);
    Tmax.push_back(T);
  }
  rep.columns = {{"N_gcd", Ngs}, {"T_max", Tmax}};
  return finish(rep);
}

CheckReport dpower_obstruction_check(const LaurentPoly& F, const UnitBasis& basis, const std::vector<double>& grid,
                                     int d, const CheckOptions& opts) {
  CheckReport rep = start("dpower_obstruction", "small_trend", grid);
  rep.metadata["eps"] = opts.eps;
  rep.metadata["d"] = d;
  if (d < 2) return fail_precondition(rep, "d must be at least 2");
  if (!basis.certified()) return fail_precondition(rep, "units are multiplicatively dependent");
  if (F.is_zero() || is_unit(F)) return fail_precondition(rep, "F must be a nonmonomial");
  if (!is_squarefree(F)) return fail_precondition(rep, "F is not square-free");
  const ExpPolyFunction f(F, basis);
  const ExpPolyFunction df = f.derived();
  if (df.is_zero()) return fail_precondition(rep, "D_u(F) vanishes");
  std::vector<double> Ngs, Ts, bound;
  for (double r : grid) {
    const GcdCount gc = gcd_counting(f, df, r, opts.zero_tol);
    const double T = characteristic_value(f, gc.r_used);
    rep.r_used.push_back(gc.r_used);
    rep.lhs.push_back(T > 0 ? gc.value / T : 0.0);
    rep.rhs.push_back(opts.eps);
    rep.margin.push_back(opts.eps - rep.lhs.back());
    Ngs.push_back(gc.value);
    Ts.push_back(T);
    bound.push_back(gc.value / (d - 1));
  }
  rep.columns = {{"N_gcd", Ngs}, {"T", Ts}, {"implied_N_g_bound", bound}};
  return finish(rep);
}

CheckReport transversality_check(const std::vector<LaurentPoly>& forms, std::complex<double> z0,
                                 const CheckOptions& opts) {
  CheckReport rep = start("transversality", "transversal", {});
  rep.metadata["z0_re"] = round12(z0.real());
  rep.metadata["z0_im"] = round12(z0.imag());
  rep.metadata["threshold"] = opts.minor_threshold;
  if (forms.empty()) return fail_precondition(rep, "no forms given");
  const std::size_t vars = forms.front().arity();
  for (const auto& f : forms)
    if (f.arity() != vars) return fail_precondition(rep, "forms must share the variables x0..xn");
  bool euler = true;
  std::vector<NumForm> num;
  try {
    for (const auto& f : forms) {
      euler = euler && euler_identity_holds(f);
      num.push_back(specialize(f, z0));
    }
  } catch (const PreconditionError& e) {
    return fail_precondition(rep, e.what());
  }
  rep.metadata["euler_identity"] = euler;
  const std::size_t n = forms.size();
  if (vars != n + 1 || (n != 1 && n != 2))
    return fail_precondition(rep, "need n forms in n+1 variables with n = 1 or 2");
  const auto points = n == 1 ? binary_points(num[0]) : plane_points(num[0], num[1]);
  if (points.empty()) rep.diagnostics.push_back("no intersection points found");
  std::vector<std::vector<double>> coords(2 * vars);
  std::vector<double> residual;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const auto& p = points[idx];
    std::vector<std::vector<cd>> J(n, std::vector<cd>(vars));
    double res = 0, norms = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < vars; ++k) J[i][k] = num[i].partial(k, p);
      res = std::max(res, std::abs(num[i](p)) / std::max(1e-300, num[i].norm()));
      norms *= std::max(1e-300, num[i].norm() * num[i].degree);
    }
    // Largest n x n minor obtained by dropping one column.
    double best = 0;
    for (std::size_t drop = 0; drop < vars; ++drop) {
      std::vector<std::vector<cd>> minor(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < vars; ++k)
          if (k != drop) minor[i].push_back(J[i][k]);
      best = std::max(best, std::abs(det(minor)));
    }
    const double rel = best / norms;
    rep.r.push_back(static_cast<double>(idx));
    rep.r_used.push_back(static_cast<double>(idx));
    rep.lhs.push_back(rel);
    rep.rhs.push_back(opts.minor_threshold);
    rep.margin.push_back(rel - opts.minor_threshold);
    residual.push_back(res);
    for (std::size_t k = 0; k < vars; ++k) {
      coords[2 * k].push_back(p[k].real());
      coords[2 * k + 1].push_back(p[k].imag());
    }
  }
  rep.metadata["r_column"] = "point index";
  for (std::size_t k = 0; k < vars; ++k) {
    rep.columns.emplace_back("x" + std::to_string(k) + "_re", coords[2 * k]);
    rep.columns.emplace_back("x" + std::to_string(k) + "_im", coords[2 * k + 1]);
  }
  rep.columns.emplace_back("residual", residual);
  return finish(rep);
}

}  // namespace expnev::numeric
